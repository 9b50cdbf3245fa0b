#include "cubelike/profile.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace cubelike {

bool self_orthogonal(const ConnectionSet& C) {
    const std::vector<Codeword> rows = matrix_rows(C);
    for (int i = 0; i < C.dim; ++i)
        for (int j = i; j < C.dim; ++j) {
            int overlap = 0;
            for (size_t k = 0; k < rows[i].words.size(); ++k)
                overlap += std::popcount(rows[i].words[k] & rows[j].words[k]);
            if (overlap & 1) return false;
        }
    return true;
}

BitVec center(const ConnectionSet& C) {
    const std::vector<Codeword> rows = matrix_rows(C);
    int g = 0;
    for (const Codeword& r : rows) g = std::gcd(g, r.weight());
    if (g < 1)
        throw std::logic_error("center: zero row gcd (all-zero matrix?)");
    uint32_t bits = 0;
    for (int i = 0; i < C.dim; ++i)
        if ((rows[i].weight() / g) & 1) bits |= 1u << i;
    if (bits == 0)
        throw std::logic_error("center: normalized row weights all even");
    if ((g & 1) && bits != sigma(C).bits)
        throw std::logic_error("center: odd row gcd but center != sigma");
    return BitVec(C.dim, bits);
}

CodeProfile classify(const ConnectionSet& C) {
    CodeProfile p;
    p.dim = C.dim;
    p.m = C.m();
    p.divisor = divisor(C);
    const std::vector<Codeword> rows = matrix_rows(C);
    p.row_gcd = 0;
    for (const Codeword& r : rows) p.row_gcd = std::gcd(p.row_gcd, r.weight());
    p.center = center(C);
    p.sigma = sigma(C);
    p.even = p.divisor % 2 == 0;
    p.doubly_even = p.divisor % 4 == 0;
    p.self_orthogonal = self_orthogonal(C);
    p.spanning = spans(C);
    return p;
}

}  // namespace cubelike
