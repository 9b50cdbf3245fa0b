// Structural profile of the binary code of a cubelike graph: divisor,
// row gcd, center, sigma, and the evenness/self-orthogonality flags that
// decide perfect state transfer.

#pragma once

#include "cubelike/gf2.hpp"

namespace cubelike {

struct CodeProfile {
    int dim = 0;
    int m = 0;
    int divisor = 0;       // D: gcd of nonzero codeword weights
    int row_gcd = 0;       // gcd of the d row weights of M
    BitVec center;         // bit i set iff (row weight i+1)/row_gcd is odd
    BitVec sigma;          // XOR of the connection set
    bool even = false;            // 2 | D
    bool doubly_even = false;     // 4 | D
    bool self_orthogonal = false;
    bool spanning = false;
};

// Every pair of rows of M (including a row with itself) has even dot
// product over the integers.  By bilinearity this is equivalent to all
// pairs of codewords having even support intersection.
bool self_orthogonal(const ConnectionSet& C);

// The candidate target of perfect state transfer: coordinate i+1 of the
// center is (w_i / gcd(w_1..w_d)) mod 2 where w_i are the row weights.
// The center is never zero (the normalized row weights cannot all be
// even, their gcd being 1); when the row gcd is odd, dividing by it
// preserves parity, so the center coincides with sigma -- both facts
// are enforced here as hard failures.
BitVec center(const ConnectionSet& C);

// Full profile.  Requires dim <= kMaxWalkDim (the divisor needs the
// whole weight distribution).
CodeProfile classify(const ConnectionSet& C);

}  // namespace cubelike
