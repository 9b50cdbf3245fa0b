// Exhaustive census of connection sets in Z_2^d (d <= 5) whose codes
// are self-orthogonal with a prescribed divisor class, grouped into
// GL(d,2)-orbits (linear equivalence = cubelike isomorphism).
//
// The scan walks all subsets of Z_2^d \ {0} in Gray-code order, so each
// step toggles a single element and the survivor predicate is
// maintained incrementally: pair counts n_ij (self-orthogonality needs
// them all even) and the 2^d codeword-weight counters w_a (the divisor
// is their gcd) live in SWAR byte lanes, a handful of word ops per
// step.  At d = 5 the full 2^31-subset space scans in seconds and is
// checkpoint-resumable.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubelike/gf2.hpp"

namespace cubelike {

enum class CensusConstraint {
    even_not_doubly_even_self_orth,  // D = 2 mod 4 (these carry PST at pi/4)
    doubly_even,                     // 4 | D (no PST)
};

// Masks encode subsets of Z_2^dim \ {0}: bit k <-> vector k+1.
uint32_t mask_of(const ConnectionSet& C);
ConnectionSet set_from_mask(int dim, uint32_t mask);

// Incremental survivor-predicate state for one evolving subset.
// Maintains, under single-element toggles:
//   * n_ij = |{c in C : c_i = c_j = 1}| for 1 <= i <= j <= dim
//     (n_ii is the weight of row i; the code is self-orthogonal iff
//     every n_ij is even), and
//   * w_a = |{c in C : a.c = 1}| = wt(a^T M) for every a,
// all as SWAR byte counters so a toggle costs a fixed handful of
// 64-bit adds.  dims 1..5.
class SubsetScanState {
public:
    explicit SubsetScanState(int dim);

    void seed(uint32_t subset_mask);   // rebuild from scratch
    void toggle(int elem_index);       // element value = elem_index + 1

    int dim() const { return dim_; }
    uint32_t mask() const { return mask_; }
    int size() const { return size_; }

    int pair_count(int i, int j) const;        // n_ij, i <= j
    bool pair_counts_all_even() const;
    int weight(uint32_t a) const;              // w_a

    // gcd of the nonzero w_a (0 for the empty subset).
    int weight_gcd() const;

private:
    int dim_;
    int npairs_;
    uint32_t mask_ = 0;
    int size_ = 0;
    std::array<uint64_t, 2> pairs_{};          // <= 15 byte counters
    std::array<uint64_t, 4> w_{};              // <= 32 byte counters
    std::array<std::array<uint64_t, 2>, 31> pair_delta_{};
    std::array<std::array<uint64_t, 4>, 31> w_delta_{};
};

// Resumable scan position plus the survivors found so far.  Subsets
// g(0), ..., g(next_step - 1) of the Gray sequence g(n) = n ^ (n >> 1)
// have been processed; masks are in visit order until the scan
// finishes and enumerate_census() sorts them.
struct ScanProgress {
    int dim = 0;
    CensusConstraint constraint = CensusConstraint::even_not_doubly_even_self_orth;
    uint64_t next_step = 0;
    uint64_t total_steps = 0;
    std::vector<uint32_t> spanning;
    std::vector<uint32_t> nonspanning;  // pass the predicate, rank < dim

    bool done() const { return next_step == total_steps; }
};

ScanProgress scan_begin(int dim, CensusConstraint constraint);

// Advances by at most max_steps, splitting the range over `threads`
// contiguous sub-ranges (each re-seeds its own state; results are
// merged in range order, so the outcome is independent of the worker
// count).
void scan_advance(ScanProgress& sp, uint64_t max_steps, int threads = 1);

// Binary checkpoint, versioned and checksummed; layout documented in
// docs/file-formats.md.  save writes atomically (tmp + rename).
void save_checkpoint(const std::string& path, const ScanProgress& sp);
ScanProgress load_checkpoint(const std::string& path);

// GL(dim,2): order and a full enumeration (columns[i] = image of e_i),
// streamed in a fixed deterministic order.  dim <= 5.
uint64_t gl2_order(int dim);
void visit_gl2(int dim,
               const std::function<void(const std::array<uint32_t, 5>&)>& fn);

// Partition of a GL-closed family of masks into orbits.  Orbits are
// explored by closing under the transvections x_i += x_j (which
// generate GL(dim,2)); an image falling outside the input family is a
// predicate bug and a hard failure.  Orbits come out sorted by
// (valency, lexicographic representative); reps are the lex-least
// members, where sets are compared as sorted element lists.
struct OrbitPartition {
    std::vector<uint32_t> reps;
    std::vector<uint64_t> sizes;
    std::unordered_map<uint32_t, int> orbit_index;  // member mask -> orbit
};

OrbitPartition orbit_census_masks(const std::vector<uint32_t>& masks, int dim);

// Minimum over all g in GL(dim,2) of the sorted element list of g.C,
// compared lexicographically.  dim <= 5.  Idempotent; constant on
// orbits; streams the full group (independent of the transvection
// closure used by orbit_census_masks, and cross-checked against it).
ConnectionSet canonical_form(const ConnectionSet& C);

struct CensusOptions {
    std::string checkpoint_path;               // empty: run without one
    uint64_t checkpoint_every = uint64_t{1} << 27;
    int threads = 1;
    std::function<void(uint64_t done, uint64_t total)> progress;
};

struct CensusResult {
    int dim = 0;
    CensusConstraint constraint = CensusConstraint::even_not_doubly_even_self_orth;
    std::vector<ConnectionSet> orbit_reps;     // canonical forms
    std::vector<uint64_t> orbit_sizes;
    std::vector<int> valencies;
    // (i, j) with i <= j: complementing any member of orbit i lands in
    // orbit j.  Orbits whose complements leave the constraint class (or
    // stop spanning) are absent; complement_partner[i] is then -1.
    std::vector<std::pair<int, int>> complement_pairing;
    std::vector<int> complement_partner;

    // Diagnostics.
    uint64_t raw_spanning = 0;
    uint64_t raw_nonspanning = 0;
    int nonspanning_orbits = 0;
    std::vector<uint32_t> spanning_masks;      // every survivor, ascending
};

// Full pipeline: (resumable) scan, orbit grouping, canonical reps,
// complement pairing.  dim <= 5; dims 1..4 serve as smoke tests.
CensusResult enumerate_census(int dim, CensusConstraint constraint,
                              const CensusOptions& opt = {});

// Groups an explicit spanning family into GL-orbits by streaming the
// full group from each unassigned seed, so orbit_sizes are whole-orbit
// lengths even when the family holds a single seed per orbit (for a
// GL-closed family the two notions agree and the sizes sum to the
// family size).  A family covering part of an orbit -- more than one
// member but not all of it -- is a hard failure, the signature of a
// broken survivor predicate.  Complements are paired against the full
// orbits.  This route is independent of the transvection closure used
// by enumerate_census and serves as its cross-check.
CensusResult orbit_census(const std::vector<ConnectionSet>& survivors, int dim,
                          CensusConstraint constraint);

}  // namespace cubelike
