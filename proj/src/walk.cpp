#include "cubelike/walk.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cubelike {

RationalPi::RationalPi(int64_t p_, int64_t q_) : p(p_), q(q_) {
    if (q == 0) throw std::invalid_argument("RationalPi: zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
}

double RationalPi::value() const {
    return static_cast<double>(p) * std::numbers::pi / static_cast<double>(q);
}

std::string RationalPi::str() const {
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

RationalPi RationalPi::parse(const std::string& s) {
    size_t slash = s.find('/');
    try {
        size_t used = 0;
        if (slash == std::string::npos) {
            int64_t p = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return RationalPi(p, 1);
        }
        int64_t p = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument(s);
        int64_t q = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw std::invalid_argument(s);
        return RationalPi(p, q);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("RationalPi: cannot parse \"" + s +
                                    "\" (expected p or p/q)");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("RationalPi: \"" + s + "\" out of range");
    }
}

std::complex<double> phase_pi(int64_t num, int64_t den) {
    if (den <= 0) throw std::invalid_argument("phase_pi: den must be positive");
    int64_t r = num % (2 * den);
    if (r < 0) r += 2 * den;
    return std::polar(1.0, std::numbers::pi * static_cast<double>(r) /
                               static_cast<double>(den));
}

std::complex<double> unit_phase(RationalPi t, int64_t n) {
    return phase_pi(t.p * n, t.q);
}

Spectrum spectrum(const ConnectionSet& C) {
    const WeightDistribution wd = weight_distribution(C);
    Spectrum s;
    s.m = wd.m;
    // counts are keyed by ascending weight, so eigenvalues m - 2k come
    // out descending.
    for (const auto& [k, cnt] : wd.counts)
        s.entries.emplace_back(int64_t{wd.m} - 2 * int64_t{k}, cnt);
    if (s.entries.empty() || s.entries.front().first != wd.m)
        throw std::logic_error("spectrum: valency eigenvalue missing");
    return s;
}

namespace {

// exp(i lambda t) for all eigenvalues present, keyed by codeword weight.
std::vector<std::complex<double>> weight_phases(const ConnectionSet& C,
                                                RationalPi t,
                                                const std::vector<uint32_t>& w) {
    uint32_t wmax = 0;
    for (uint32_t k : w) wmax = std::max(wmax, k);
    std::vector<std::complex<double>> ph(wmax + 1);
    for (uint32_t k = 0; k <= wmax; ++k)
        ph[k] = unit_phase(t, int64_t{C.m()} - 2 * int64_t{k});
    return ph;
}

}  // namespace

AmplitudeVector amplitude_row(const ConnectionSet& C, RationalPi t) {
    if (C.dim > kMaxWalkDim)
        throw std::invalid_argument("amplitude_row: requires dim <= 24");
    const std::vector<uint32_t> w = codeword_weights_all(C);
    const std::vector<std::complex<double>> ph = weight_phases(C, t, w);
    const size_t n = size_t{1} << C.dim;
    AmplitudeVector out;
    out.dim = C.dim;
    out.t = t;
    out.values.resize(n);
    for (size_t a = 0; a < n; ++a) out.values[a] = ph[w[a]];
    // H(t)_{0,v} = 2^{-d} sum_a (-1)^{a.v} exp(i lambda_a t): one more
    // Walsh-Hadamard transform, now over complex values.
    for (size_t len = 1; len < n; len <<= 1)
        for (size_t i = 0; i < n; i += len << 1)
            for (size_t j = i; j < i + len; ++j) {
                const std::complex<double> x = out.values[j];
                const std::complex<double> y = out.values[j + len];
                out.values[j] = x + y;
                out.values[j + len] = x - y;
            }
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& z : out.values) z *= scale;
    return out;
}

std::complex<double> amplitude_entry(const ConnectionSet& C, RationalPi t,
                                     const BitVec& u, const BitVec& v) {
    if (u.dim != C.dim || v.dim != C.dim)
        throw std::invalid_argument("amplitude_entry: dimension mismatch");
    if (C.dim > kMaxWalkDim)
        throw std::invalid_argument("amplitude_entry: requires dim <= 24");
    const uint32_t x = u.bits ^ v.bits;
    const std::vector<uint32_t> w = codeword_weights_all(C);
    const std::vector<std::complex<double>> ph = weight_phases(C, t, w);
    std::complex<double> sum = 0;
    const size_t n = size_t{1} << C.dim;
    for (size_t a = 0; a < n; ++a) {
        if (dot(static_cast<uint32_t>(a), x))
            sum -= ph[w[a]];
        else
            sum += ph[w[a]];
    }
    return sum / static_cast<double>(n);
}

std::complex<double> trace(const ConnectionSet& C, RationalPi t) {
    std::complex<double> sum = 0;
    for (const auto& [lambda, mult] : spectrum(C).entries)
        sum += static_cast<double>(mult) * unit_phase(t, lambda);
    return sum;
}

std::vector<std::pair<double, double>> amplitude_curve(const ConnectionSet& C,
                                                       const BitVec& u,
                                                       RationalPi until) {
    if (u.dim != C.dim)
        throw std::invalid_argument("amplitude_curve: dimension mismatch");
    if (until.p <= 0)
        throw std::invalid_argument("amplitude_curve: until must be positive");
    if (C.dim > kMaxWalkDim)
        throw std::invalid_argument("amplitude_curve: requires dim <= 24");
    const std::vector<uint32_t> w = codeword_weights_all(C);
    const size_t n = size_t{1} << C.dim;
    const int64_t q64 = 64 * until.q;
    const int64_t kmax = 64 * until.p;
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<size_t>(kmax) + 1);
    for (int64_t k = 0; k <= kmax; ++k) {
        const RationalPi t(k, q64);
        const std::vector<std::complex<double>> ph = weight_phases(C, t, w);
        std::complex<double> sum = 0;
        for (size_t a = 0; a < n; ++a) {
            if (dot(static_cast<uint32_t>(a), u.bits))
                sum -= ph[w[a]];
            else
                sum += ph[w[a]];
        }
        out.emplace_back(t.value(), std::abs(sum / static_cast<double>(n)));
    }
    return out;
}

DenseMatrix dense_oracle(const ConnectionSet& C, RationalPi t) {
    if (C.dim > kMaxDenseDim)
        throw std::invalid_argument("dense_oracle: requires dim <= 6");
    const int n = 1 << C.dim;
    DenseMatrix h;
    h.n = n;
    h.a.assign(static_cast<size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r) h.at(r, r) = 1.0;
    const double c = std::cos(t.value());
    const std::complex<double> is(0.0, std::sin(t.value()));
    DenseMatrix next = h;
    for (uint32_t e : C.elems) {
        // (cos t I + i sin t P_e) * H: row r pulls row r^e.
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                next.at(r, col) = c * h.at(r, col) + is * h.at(int(r ^ e), col);
        std::swap(h, next);
    }
    return h;
}

}  // namespace cubelike
