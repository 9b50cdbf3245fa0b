#include "cubelike/gf2.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cubelike {

uint32_t dim_mask(int dim) {
    return dim >= 32 ? 0xFFFFFFFFu : ((1u << dim) - 1u);
}

bool dot(uint32_t a, uint32_t b) {
    return std::popcount(a & b) & 1;
}

BitVec::BitVec(int dim_, uint32_t bits_) : dim(dim_), bits(bits_) {
    if (dim < 1 || dim > kMaxCodeDim)
        throw std::invalid_argument("BitVec: dim must be in [1, 32], got " +
                                    std::to_string(dim));
    if (bits & ~dim_mask(dim))
        throw std::invalid_argument("BitVec: bits exceed 2^dim - 1");
}

BitVec BitVec::operator^(const BitVec& o) const {
    if (dim != o.dim)
        throw std::invalid_argument("BitVec: dimension mismatch in XOR");
    return BitVec(dim, bits ^ o.bits);
}

int BitVec::weight() const { return std::popcount(bits); }

ConnectionSet ConnectionSet::make(int dim, std::vector<uint32_t> elems,
                                  bool keep_order) {
    if (dim < 1 || dim > kMaxCodeDim)
        throw std::invalid_argument("ConnectionSet: dim must be in [1, 32]");
    if (elems.empty())
        throw std::invalid_argument("ConnectionSet: at least one element required");
    const uint32_t mask = dim_mask(dim);
    for (uint32_t e : elems) {
        if (e == 0)
            throw std::invalid_argument("ConnectionSet: elements must be nonzero");
        if (e & ~mask)
            throw std::invalid_argument("ConnectionSet: element exceeds 2^dim - 1");
    }
    std::vector<uint32_t> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("ConnectionSet: elements must be distinct");
    ConnectionSet C;
    C.dim = dim;
    C.elems = keep_order ? std::move(elems) : std::move(sorted);
    return C;
}

int Codeword::weight() const {
    int w = 0;
    for (uint64_t word : words) w += std::popcount(word);
    return w;
}

Codeword codeword(const ConnectionSet& C, const BitVec& a) {
    if (a.dim != C.dim)
        throw std::invalid_argument("codeword: dimension mismatch");
    Codeword cw;
    cw.length = C.m();
    cw.words.assign((C.m() + 63) / 64, 0);
    for (int j = 0; j < C.m(); ++j)
        if (dot(a.bits, C.elems[j]))
            cw.words[j >> 6] |= uint64_t{1} << (j & 63);
    return cw;
}

int codeword_weight(const ConnectionSet& C, const BitVec& a) {
    if (a.dim != C.dim)
        throw std::invalid_argument("codeword_weight: dimension mismatch");
    int w = 0;
    for (uint32_t c : C.elems) w += dot(a.bits, c);
    return w;
}

std::vector<Codeword> matrix_rows(const ConnectionSet& C) {
    std::vector<Codeword> rows(C.dim);
    for (int i = 0; i < C.dim; ++i) {
        rows[i].length = C.m();
        rows[i].words.assign((C.m() + 63) / 64, 0);
    }
    for (int j = 0; j < C.m(); ++j) {
        uint32_t c = C.elems[j];
        while (c) {
            int i = std::countr_zero(c);
            c &= c - 1;
            rows[i].words[j >> 6] |= uint64_t{1} << (j & 63);
        }
    }
    return rows;
}

std::vector<uint32_t> codeword_weights_all(const ConnectionSet& C) {
    if (C.dim > kMaxWalkDim)
        throw std::invalid_argument(
            "codeword_weights_all: whole-space sweep requires dim <= 24");
    const size_t n = size_t{1} << C.dim;
    std::vector<int32_t> f(n, 0);
    for (uint32_t c : C.elems) f[c] = 1;
    // In-place Walsh-Hadamard transform: F[a] = sum_x (-1)^{a.x} f[x].
    for (size_t len = 1; len < n; len <<= 1)
        for (size_t i = 0; i < n; i += len << 1)
            for (size_t j = i; j < i + len; ++j) {
                int32_t x = f[j], y = f[j + len];
                f[j] = x + y;
                f[j + len] = x - y;
            }
    std::vector<uint32_t> w(n);
    const int32_t m = C.m();
    for (size_t a = 0; a < n; ++a)
        w[a] = static_cast<uint32_t>((m - f[a]) / 2);
    return w;
}

WeightDistribution weight_distribution(const ConnectionSet& C) {
    const std::vector<uint32_t> w = codeword_weights_all(C);
    WeightDistribution wd;
    wd.m = C.m();
    wd.total = uint64_t{1} << C.dim;
    for (uint32_t k : w) ++wd.counts[static_cast<int>(k)];
    if (wd.counts.count(0) == 0)
        throw std::logic_error("weight_distribution: weight 0 missing (a = 0)");
    return wd;
}

int divisor(const ConnectionSet& C) {
    int g = 0;
    for (const auto& [k, cnt] : weight_distribution(C).counts)
        if (k != 0) g = std::gcd(g, k);
    if (g < 1)
        throw std::logic_error("divisor: no nonzero codeword weights");
    return g;
}

BitVec sigma(const ConnectionSet& C) {
    uint32_t s = 0;
    for (uint32_t c : C.elems) s ^= c;
    return BitVec(C.dim, s);
}

int rank(const ConnectionSet& C) {
    uint32_t basis[kMaxCodeDim] = {0};
    int r = 0;
    for (uint32_t c : C.elems) {
        uint32_t v = c;
        while (v) {
            int h = 31 - std::countl_zero(v);
            if (!basis[h]) {
                basis[h] = v;
                ++r;
                break;
            }
            v ^= basis[h];
        }
    }
    return r;
}

bool spans(const ConnectionSet& C) { return rank(C) == C.dim; }

}  // namespace cubelike
