// Deciding and certifying perfect state transfer (PST).
//
// With D the gcd of the nonzero codeword weights, the walk is periodic
// with minimum period pi/D, and PST can only happen at pi/(2D), from 0
// to the center of the code.  The decision runs through the divisibility
// conditions below; verdicts on desk-sized graphs are additionally
// certified numerically against the amplitude engine.

#pragma once

#include <complex>
#include <optional>

#include "cubelike/gf2.hpp"
#include "cubelike/rational.hpp"

namespace cubelike {

enum class Certification { theorem, numeric, both };

struct PstVerdict {
    bool occurs = false;
    int divisor = 0;
    RationalPi time;                              // pi/(2 divisor) candidate
    std::optional<BitVec> target;                 // center, when PST occurs
    std::optional<std::complex<double>> phase;    // H(time)_{0,target}
    Certification certified_by = Certification::theorem;
};

struct PeriodInfo {
    RationalPi period;            // pi / divisor
    std::complex<double> alpha;   // H(period) = alpha I, alpha = exp(i m pi / D)
};

// Condition on pairwise supports: delta divides |supp(x) & supp(y)| for
// every pair of codewords x, y (including x = y, so delta divides every
// weight).  Fast paths: delta = 1 is vacuous; odd delta reduces to
// delta | divisor; delta = 2 is self-orthogonality.  The general even
// case walks all codeword pairs for dim <= 13 and otherwise uses the
// equivalent formulation "delta divides every weight and
// a -> (wt(a^T M)/delta) mod 2 is linear".
bool condition_c(const ConnectionSet& C, int delta);

// delta divides every codeword weight and (wt(a^T M)/delta) mod 2
// equals a.u for every a.
bool condition_b(const ConnectionSet& C, int delta, const BitVec& u);

// Default numeric tolerance by dimension (desk scale: 1e-9 up to
// dim 12, 1e-8 up to dim 24).
double default_tolerance(int dim);

// Decides PST at the only possible time pi/(2D).  When the verdict is
// positive, the target is the center of the code and condition (b) is
// re-checked against it; for dim <= 20 the phase is also certified
// numerically (|H|=1 within tol).  Internal inconsistencies are hard
// failures.  tol = 0 picks default_tolerance(dim).
PstVerdict detect_pst(const ConnectionSet& C, double tol = 0.0);

// Minimum period pi/D and the scalar alpha with H(pi/D) = alpha I;
// certified numerically for dim <= 20.  tol = 0 as above.
PeriodInfo min_period(const ConnectionSet& C, double tol = 0.0);

// |H(t)_{0,u}| >= 1 - tol, straight from the amplitude engine.
// Requires u != 0 and dim <= kMaxWalkDim.
bool verify_pst_numeric(const ConnectionSet& C, RationalPi t, const BitVec& u,
                        double tol);

// Necessary condition for PST anywhere at time t: the trace must vanish
// (|trace| <= tol * 2^dim).  Cheap O(#weights) pre-filter.
bool trace_necessary_check(const ConnectionSet& C, RationalPi t, double tol);

}  // namespace cubelike
