// Times are rational multiples of pi, kept exact so that phases of the
// form exp(i pi p n / q) can be reduced modulo 2 pi before any floating
// point enters.

#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace cubelike {

// t = p/q * pi, stored reduced with q >= 1 (sign lives in p).
struct RationalPi {
    int64_t p = 0;
    int64_t q = 1;

    RationalPi() = default;
    RationalPi(int64_t p, int64_t q);  // reduces; throws on q == 0

    bool operator==(const RationalPi&) const = default;

    double value() const;              // p * pi / q
    std::string str() const;           // "p/q" (or "p" when q == 1)

    // Parses "p/q" or "p".
    static RationalPi parse(const std::string& s);
};

// exp(i * pi * num / den) with num reduced modulo 2*den first.
std::complex<double> phase_pi(int64_t num, int64_t den);

// exp(i * t * n) for t = p/q * pi.
std::complex<double> unit_phase(RationalPi t, int64_t n);

}  // namespace cubelike
