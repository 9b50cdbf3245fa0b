#include "cubelike/pst.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cubelike/profile.hpp"
#include "cubelike/walk.hpp"

namespace cubelike {

namespace {

// All 2^dim codewords in packed form, built incrementally from the rows
// of M: cw[a] = cw[a without lowest bit] ^ row[lowest bit].
std::vector<Codeword> all_codewords(const ConnectionSet& C) {
    const std::vector<Codeword> rows = matrix_rows(C);
    const size_t n = size_t{1} << C.dim;
    std::vector<Codeword> cw(n);
    cw[0].length = C.m();
    cw[0].words.assign((C.m() + 63) / 64, 0);
    for (size_t a = 1; a < n; ++a) {
        const int low = std::countr_zero(static_cast<uint32_t>(a));
        const Codeword& prev = cw[a & (a - 1)];
        cw[a].length = C.m();
        cw[a].words.resize(prev.words.size());
        for (size_t k = 0; k < prev.words.size(); ++k)
            cw[a].words[k] = prev.words[k] ^ rows[low].words[k];
    }
    return cw;
}

bool condition_c_pairs(const ConnectionSet& C, int delta) {
    const std::vector<Codeword> cw = all_codewords(C);
    const size_t n = cw.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            int overlap = 0;
            for (size_t k = 0; k < cw[i].words.size(); ++k)
                overlap += std::popcount(cw[i].words[k] & cw[j].words[k]);
            if (overlap % delta != 0) return false;
        }
    return true;
}

// Equivalent linear-map formulation, usable at any dim <= kMaxWalkDim:
// delta | wt(a^T M) for all a, and a -> (wt(a^T M)/delta) mod 2 agrees
// with a.u for u read off the standard basis vectors.
bool condition_c_linear(const ConnectionSet& C, int delta) {
    const std::vector<uint32_t> w = codeword_weights_all(C);
    const size_t n = w.size();
    for (size_t a = 1; a < n; ++a)
        if (w[a] % delta != 0) return false;
    uint32_t u = 0;
    for (int i = 0; i < C.dim; ++i)
        if ((w[size_t{1} << i] / delta) & 1) u |= 1u << i;
    for (size_t a = 0; a < n; ++a) {
        const bool lhs = (w[a] / delta) & 1;
        if (lhs != dot(static_cast<uint32_t>(a), u)) return false;
    }
    return true;
}

}  // namespace

bool condition_c(const ConnectionSet& C, int delta) {
    if (delta < 1)
        throw std::invalid_argument("condition_c: delta must be >= 1");
    if (delta == 1) return true;
    if (delta & 1) return divisor(C) % delta == 0;
    if (delta == 2) return self_orthogonal(C);
    if (C.dim <= 13) return condition_c_pairs(C, delta);
    return condition_c_linear(C, delta);
}

bool condition_b(const ConnectionSet& C, int delta, const BitVec& u) {
    if (delta < 1)
        throw std::invalid_argument("condition_b: delta must be >= 1");
    if (u.dim != C.dim)
        throw std::invalid_argument("condition_b: dimension mismatch");
    const std::vector<uint32_t> w = codeword_weights_all(C);
    for (size_t a = 0; a < w.size(); ++a) {
        if (w[a] % delta != 0) return false;
        const bool lhs = (w[a] / delta) & 1;
        if (lhs != dot(static_cast<uint32_t>(a), u.bits)) return false;
    }
    return true;
}

double default_tolerance(int dim) { return dim <= 12 ? 1e-9 : 1e-8; }

namespace {

// Full numeric certification is mandatory on desk-sized instances and
// skipped (not silently loosened) above this.
constexpr int kCertifyDimCap = 20;

}  // namespace

PstVerdict detect_pst(const ConnectionSet& C, double tol) {
    if (tol == 0.0) tol = default_tolerance(C.dim);
    PstVerdict v;
    v.divisor = divisor(C);
    v.time = RationalPi(1, 2 * int64_t{v.divisor});
    v.occurs = condition_c(C, v.divisor);
    if (!v.occurs) {
        v.certified_by = Certification::theorem;
        return v;
    }
    const BitVec u = center(C);
    if (u.zero())
        throw std::logic_error("detect_pst: zero center with condition (c) holding");
    if (!condition_b(C, v.divisor, u))
        throw std::logic_error(
            "detect_pst: condition (c) holds but condition (b) fails at the center");
    v.target = u;
    v.certified_by = Certification::theorem;
    if (C.dim <= kCertifyDimCap) {
        const std::complex<double> ph =
            amplitude_entry(C, v.time, BitVec(C.dim, 0), u);
        if (std::abs(ph) < 1.0 - tol)
            throw std::runtime_error(
                "detect_pst: theorem verdict not confirmed numerically, |H| = " +
                std::to_string(std::abs(ph)));
        v.phase = ph;
        v.certified_by = Certification::both;
    }
    return v;
}

PeriodInfo min_period(const ConnectionSet& C, double tol) {
    if (tol == 0.0) tol = default_tolerance(C.dim);
    PeriodInfo info;
    const int D = divisor(C);
    info.period = RationalPi(1, D);
    info.alpha = phase_pi(C.m(), D);
    if (C.dim <= kCertifyDimCap) {
        const AmplitudeVector row = amplitude_row(C, info.period);
        double err = std::abs(row.values[0] - info.alpha);
        for (size_t vtx = 1; vtx < row.values.size(); ++vtx)
            err = std::max(err, std::abs(row.values[vtx]));
        if (err > tol)
            throw std::runtime_error(
                "min_period: H(pi/D) deviates from alpha I by " +
                std::to_string(err));
    }
    return info;
}

bool verify_pst_numeric(const ConnectionSet& C, RationalPi t, const BitVec& u,
                        double tol) {
    if (u.dim != C.dim)
        throw std::invalid_argument("verify_pst_numeric: dimension mismatch");
    if (u.zero())
        throw std::invalid_argument("verify_pst_numeric: target must be nonzero");
    const std::complex<double> ph =
        amplitude_entry(C, t, BitVec(C.dim, 0), u);
    return std::abs(ph) >= 1.0 - tol;
}

bool trace_necessary_check(const ConnectionSet& C, RationalPi t, double tol) {
    const double n = static_cast<double>(uint64_t{1} << C.dim);
    return std::abs(trace(C, t)) <= tol * n;
}

}  // namespace cubelike
