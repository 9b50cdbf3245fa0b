// Bit-packed arithmetic over Z_2^d for cubelike graphs.
//
// A cubelike graph on 2^d vertices is given by a connection set C of
// distinct nonzero vectors in Z_2^d; vertices u, v are adjacent iff
// u + v is in C.  Writing the elements of C as the columns of a d x m
// matrix M, the row space of M is the binary code of the graph, and
// everything spectral about the walk is a statement about the weights
// of that code.
//
// Bit convention, used consistently across the whole library, the file
// formats and the CLI:
//   * bit i of an element (0-based, least significant first) is
//     coordinate i+1, i.e. row i+1 of M;
//   * the integer encoding of a vector is its vertex index in [0, 2^d);
//   * a printed bit string runs coordinate 1 .. d left to right, so the
//     leftmost character is the least significant bit.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace cubelike {

// Per-element operations accept dim up to 32; any operation that sweeps
// the whole space (weights of all 2^dim codewords, amplitudes, ...)
// requires dim <= kMaxWalkDim since it materializes 2^dim values.
inline constexpr int kMaxCodeDim = 32;
inline constexpr int kMaxWalkDim = 24;   // 2^24 complex values ~ 256 MiB
inline constexpr int kMaxDenseDim = 6;   // dense unitaries stay tiny
inline constexpr int kMaxCensusDim = 5;  // exhaustive subset scans

// All-ones mask for a dimension (safe at dim = 32).
uint32_t dim_mask(int dim);

// Parity of the standard inner product <a, b> over Z_2.
bool dot(uint32_t a, uint32_t b);

// A vector in Z_2^dim.  bits must satisfy bits < 2^dim.
struct BitVec {
    int dim = 1;
    uint32_t bits = 0;

    BitVec() = default;
    BitVec(int dim, uint32_t bits);

    BitVec operator^(const BitVec& o) const;  // group addition in Z_2^dim
    bool operator==(const BitVec& o) const = default;

    bool zero() const { return bits == 0; }
    int weight() const;
};

// A connection set: distinct nonzero elements of Z_2^dim, kept in the
// column order of M.  make() sorts ascending by integer encoding unless
// keep_order is set (constructions that cite column positions need the
// original order).
struct ConnectionSet {
    int dim = 1;
    std::vector<uint32_t> elems;

    int m() const { return static_cast<int>(elems.size()); }
    BitVec element(int j) const { return BitVec(dim, elems[j]); }

    static ConnectionSet make(int dim, std::vector<uint32_t> elems,
                              bool keep_order = false);
};

// A codeword a^T M, packed 64 bits per word; bit j is the parity of
// a . c_j, i.e. the j-th coordinate of the codeword.
struct Codeword {
    int length = 0;
    std::vector<uint64_t> words;

    bool bit(int j) const { return (words[j >> 6] >> (j & 63)) & 1; }
    int weight() const;
    bool operator==(const Codeword&) const = default;
};

Codeword codeword(const ConnectionSet& C, const BitVec& a);
int codeword_weight(const ConnectionSet& C, const BitVec& a);

// The d rows of M in the same packed layout (row i holds bit i of every
// column).  Row weights drive the center of the code.
std::vector<Codeword> matrix_rows(const ConnectionSet& C);

// wt(a^T M) for every a in [0, 2^dim), computed with one integer
// Walsh-Hadamard transform of the indicator of C: the transform value
// at a equals sum_{c in C} (-1)^{a.c} = m - 2 wt(a^T M).
// Requires dim <= kMaxWalkDim.
std::vector<uint32_t> codeword_weights_all(const ConnectionSet& C);

// Weight distribution of the code *with multiplicity*: counts[k] is the
// number of a in Z_2^dim with wt(a^T M) = k, so the counts total 2^dim
// and counts[0] covers the dual kernel (exactly 1 when C spans).
struct WeightDistribution {
    int m = 0;
    uint64_t total = 0;
    std::map<int, uint64_t> counts;
};

WeightDistribution weight_distribution(const ConnectionSet& C);

// gcd of the nonzero codeword weights (>= 1).
int divisor(const ConnectionSet& C);

// XOR of the elements of C; the vertex reached at time pi/2.
BitVec sigma(const ConnectionSet& C);

// GF(2) rank of the elements of C, and whether they span Z_2^dim
// (equivalently: the graph is connected).
int rank(const ConnectionSet& C);
bool spans(const ConnectionSet& C);

}  // namespace cubelike
