// Stock graphs and the closure operations that manufacture new PST
// instances from old ones: retargeting via sigma, complementation
// inside Z_2^d \ {0}, and direct sums / tensor powers.

#pragma once

#include <string>

#include "cubelike/gf2.hpp"

namespace cubelike {

// C = {e_1, ..., e_d}: the d-cube.  PST 0 -> all-ones at pi/2.
ConnectionSet hypercube(int d);

// The bundled 5-dimensional, valency-11 graph with PST at pi/4 to
// vertex 16 (bit string 00001); its code has weight distribution
// {0:1, 4:10, 6:16, 8:5}.  Column order is preserved as bundled.
ConnectionSet example_graph();

// Moves the time-pi/2 target from sigma(C) to u by toggling at most two
// elements (sigma(result) == u); u must be nonzero.
ConnectionSet pst_to_target(const ConnectionSet& C, const BitVec& u);

// Z_2^dim \ ({0} union C); errors when C already contains every
// nonzero vector.
ConnectionSet complement(const ConnectionSet& C);

// {(c, 0) : c in C1} union {(0, c') : c' in C2} in Z_2^{d1+d2}, with C1
// in the low bits.  The walk factorizes: H(t) = H1(t) (x) H2(t).
ConnectionSet direct_sum(const ConnectionSet& a, const ConnectionSet& b);

// k-fold direct sum of C with itself.
ConnectionSet power(const ConnectionSet& C, int k);

enum class Provenance { hypercube, example, complement, direct_sum, custom };

struct NamedGraph {
    std::string name;
    ConnectionSet connection_set;
    Provenance provenance = Provenance::custom;
};

}  // namespace cubelike
