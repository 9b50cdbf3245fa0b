// The continuous quantum walk H(t) = exp(i A t) on a cubelike graph.
//
// The adjacency matrix is diagonalized by the characters of Z_2^d: the
// eigenvalue attached to a in Z_2^d is m - 2 wt(a^T M), with projector
// entries 2^{-d} (-1)^{a.(u+v)}.  Amplitudes therefore come out of a
// Walsh-Hadamard transform of the eigenvalue phases; no matrix is ever
// materialized except in the dense cross-check oracle.

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubelike/gf2.hpp"
#include "cubelike/rational.hpp"

namespace cubelike {

// Eigenvalues with multiplicities, sorted descending; the largest is
// always m (the valency, from a = 0).
struct Spectrum {
    int m = 0;
    std::vector<std::pair<int64_t, uint64_t>> entries;
};

Spectrum spectrum(const ConnectionSet& C);

// Row u = 0 of H(t): values[v] = H(t)_{0,v}.  By vertex transitivity
// this is the whole story: H(t)_{u,v} = H(t)_{0, u^v}.
struct AmplitudeVector {
    int dim = 0;
    RationalPi t;
    std::vector<std::complex<double>> values;
};

// O(d 2^d) via one complex Walsh-Hadamard transform.  dim <= kMaxWalkDim.
AmplitudeVector amplitude_row(const ConnectionSet& C, RationalPi t);

// Single entry H(t)_{u,v} as a direct character sum, O(2^d) after the
// weight table.  dim <= kMaxWalkDim.
std::complex<double> amplitude_entry(const ConnectionSet& C, RationalPi t,
                                     const BitVec& u, const BitVec& v);

// trace H(t) = sum over the spectrum of multiplicity * exp(i lambda t);
// linear in the number of distinct weights once the spectrum is known.
std::complex<double> trace(const ConnectionSet& C, RationalPi t);

// Dense unitary built from the commuting product form
//   H(t) = prod_{c in C} (cos t I + i sin t P_c),
// a deliberately different route used only to cross-check the transform
// path.  dim <= kMaxDenseDim.
struct DenseMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;  // row-major n x n

    std::complex<double>& at(int r, int c) { return a[size_t(r) * n + c]; }
    const std::complex<double>& at(int r, int c) const { return a[size_t(r) * n + c]; }
};

DenseMatrix dense_oracle(const ConnectionSet& C, RationalPi t);

// (t, |H(t)_{0,u}|) sampled at t_k = k pi / (64 q) for k = 0 .. 64 p
// where until = p/q, i.e. 64 q points per pi; the weight table is
// computed once for the whole sweep.  Requires until > 0.
std::vector<std::pair<double, double>> amplitude_curve(const ConnectionSet& C,
                                                       const BitVec& u,
                                                       RationalPi until);

}  // namespace cubelike
