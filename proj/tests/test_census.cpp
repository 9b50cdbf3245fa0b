// Census machinery: incremental subset-scan state, Gray-code scanning,
// checkpoints, GL(dim,2) enumeration, canonicalization, and orbit
// grouping — pinned against brute-force recomputation and the known
// small-dimension counts.

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "cubelike/census.hpp"
#include "cubelike/construct.hpp"
#include "cubelike/profile.hpp"
#include "cubelike/pst.hpp"
#include "helpers.hpp"

using namespace cubelike;

namespace {

// Everything the incremental state claims, recomputed from scratch.
void check_state_matches(const SubsetScanState& st) {
    const int dim = st.dim();
    const uint32_t mask = st.mask();
    CHECK(st.size() == std::popcount(mask));
    if (mask == 0) {
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) CHECK(st.pair_count(i, j) == 0);
        for (uint32_t a = 0; a < (uint32_t{1} << dim); ++a)
            CHECK(st.weight(a) == 0);
        CHECK(st.pair_counts_all_even());
        CHECK(st.weight_gcd() == 0);
        return;
    }
    const ConnectionSet C = set_from_mask(dim, mask);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            int nij = 0;
            for (uint32_t c : C.elems) nij += int((c >> i) & (c >> j) & 1);
            CHECK(st.pair_count(i, j) == nij);
        }
    for (uint32_t a = 0; a < (uint32_t{1} << dim); ++a)
        CHECK(st.weight(a) == codeword_weight(C, BitVec(dim, a)));
    CHECK(st.pair_counts_all_even() == self_orthogonal(C));
    CHECK(st.weight_gcd() == divisor(C));
}

std::string temp_path(const char* stem) {
    return (std::filesystem::temp_directory_path() /
            (std::string(stem) + "-" + std::to_string(::getpid()) + ".ckpt"))
        .string();
}

struct PathGuard {
    std::string path;
    ~PathGuard() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
        std::filesystem::remove(path + ".tmp", ec);
    }
};

}  // namespace

TEST_CASE("mask round trip and validation") {
    const ConnectionSet ex = ConnectionSet::make(4, {3, 9, 14});
    const uint32_t mask = mask_of(ex);
    CHECK(mask == ((1u << 2) | (1u << 8) | (1u << 13)));
    CHECK(set_from_mask(4, mask).elems == ex.elems);
    CHECK_THROWS_AS(set_from_mask(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(set_from_mask(6, 1), std::invalid_argument);
}

TEST_CASE("incremental scan state survives randomized toggle storms") {
    std::mt19937_64 rng(987654321);
    for (int dim = 1; dim <= 5; ++dim) {
        SubsetScanState st(dim);
        const uint32_t nelems = dim_mask(dim);
        const int sequences = 2200;
        for (int s = 0; s < sequences; ++s) {
            const uint32_t seed =
                uint32_t(rng()) & ((uint32_t{1} << nelems) - 1);
            st.seed(seed);
            const int len = 1 + int(rng() % 40);
            for (int k = 0; k < len; ++k) st.toggle(int(rng() % nelems));
            check_state_matches(st);
        }
    }
}

TEST_CASE("scan state seed and toggle validate their input") {
    SubsetScanState st(3);
    CHECK_THROWS_AS(st.toggle(7), std::invalid_argument);
    CHECK_THROWS_AS(st.toggle(-1), std::invalid_argument);
    CHECK_THROWS_AS(st.seed(1u << 7), std::invalid_argument);
    CHECK_THROWS_AS(st.pair_count(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(st.weight(8), std::invalid_argument);
    st.seed((1u << 7) - 1);  // the full simplex: all pair counts 4
    CHECK(st.size() == 7);
    CHECK(st.pair_count(0, 0) == 4);
    CHECK(st.pair_count(0, 2) == 2);
    CHECK(st.weight_gcd() == 4);
}

TEST_CASE("the Gray-code scan equals a direct sweep of the predicate") {
    for (const CensusConstraint cons :
         {CensusConstraint::even_not_doubly_even_self_orth,
          CensusConstraint::doubly_even}) {
        for (int dim = 1; dim <= 4; ++dim) {
            ScanProgress sp = scan_begin(dim, cons);
            CHECK(sp.total_steps == (uint64_t{1} << dim_mask(dim)));
            scan_advance(sp, sp.total_steps);
            REQUIRE(sp.done());

            std::vector<uint32_t> want_span, want_nonspan;
            for (uint32_t mask = 1; mask < (uint32_t{1} << dim_mask(dim));
                 ++mask) {
                const ConnectionSet C = set_from_mask(dim, mask);
                if (!self_orthogonal(C)) continue;
                const int D = divisor(C);
                const bool wanted = cons == CensusConstraint::doubly_even
                                        ? (D % 4 == 0)
                                        : (D % 4 == 2);
                if (!wanted) continue;
                (spans(C) ? want_span : want_nonspan).push_back(mask);
            }
            std::vector<uint32_t> got_span = sp.spanning;
            std::vector<uint32_t> got_nonspan = sp.nonspanning;
            std::sort(got_span.begin(), got_span.end());
            std::sort(got_nonspan.begin(), got_nonspan.end());
            CHECK(got_span == want_span);
            CHECK(got_nonspan == want_nonspan);
        }
    }
}

TEST_CASE("scan output is independent of chunking and worker count") {
    ScanProgress one = scan_begin(4, CensusConstraint::doubly_even);
    scan_advance(one, one.total_steps, 1);

    ScanProgress chunked = scan_begin(4, CensusConstraint::doubly_even);
    while (!chunked.done()) scan_advance(chunked, 999, 3);

    CHECK(one.spanning == chunked.spanning);
    CHECK(one.nonspanning == chunked.nonspanning);
    CHECK(one.next_step == chunked.next_step);
}

TEST_CASE("checkpoints round-trip, resume, and reject corruption") {
    PathGuard guard{temp_path("census-roundtrip")};

    ScanProgress sp = scan_begin(4, CensusConstraint::doubly_even);
    scan_advance(sp, 10000);
    REQUIRE_FALSE(sp.done());
    save_checkpoint(guard.path, sp);

    const ScanProgress back = load_checkpoint(guard.path);
    CHECK(back.dim == sp.dim);
    CHECK(back.constraint == sp.constraint);
    CHECK(back.next_step == sp.next_step);
    CHECK(back.total_steps == sp.total_steps);
    CHECK(back.spanning == sp.spanning);
    CHECK(back.nonspanning == sp.nonspanning);

    // resuming the loaded copy reproduces the uninterrupted scan
    ScanProgress resumed = back;
    scan_advance(resumed, resumed.total_steps);
    scan_advance(sp, sp.total_steps);
    CHECK(resumed.spanning == sp.spanning);
    CHECK(resumed.nonspanning == sp.nonspanning);

    // flip one payload byte: the checksum must catch it
    {
        std::fstream f(guard.path,
                       std::ios::in | std::ios::out | std::ios::binary);
        f.seekg(6);
        char b = 0;
        f.read(&b, 1);
        b = char(b ^ 0x40);
        f.seekp(6);
        f.write(&b, 1);
    }
    CHECK_THROWS_AS(load_checkpoint(guard.path), std::runtime_error);

    CHECK_THROWS_AS(load_checkpoint(guard.path + ".missing"),
                    std::runtime_error);
}

TEST_CASE("checkpoints of a different census are refused on resume") {
    PathGuard guard{temp_path("census-mismatch")};
    ScanProgress sp = scan_begin(3, CensusConstraint::doubly_even);
    scan_advance(sp, 5);
    save_checkpoint(guard.path, sp);

    CensusOptions opt;
    opt.checkpoint_path = guard.path;
    CHECK_THROWS_AS(
        enumerate_census(3, CensusConstraint::even_not_doubly_even_self_orth,
                         opt),
        std::runtime_error);
    CHECK_THROWS_AS(enumerate_census(4, CensusConstraint::doubly_even, opt),
                    std::runtime_error);
    // matching census resumes fine
    const CensusResult res =
        enumerate_census(3, CensusConstraint::doubly_even, opt);
    CHECK(res.orbit_reps.size() == 1);
}

TEST_CASE("gl2_order and visit_gl2 agree and enumerate distinct invertibles") {
    CHECK(gl2_order(1) == 1);
    CHECK(gl2_order(2) == 6);
    CHECK(gl2_order(3) == 168);
    CHECK(gl2_order(4) == 20160);
    CHECK(gl2_order(5) == 9999360);

    for (int dim = 1; dim <= 3; ++dim) {
        std::set<std::vector<uint32_t>> seen;
        visit_gl2(dim, [&](const std::array<uint32_t, 5>& cols) {
            std::vector<uint32_t> tuple(cols.begin(), cols.begin() + dim);
            const ConnectionSet as_set = ConnectionSet::make(
                dim, std::vector<uint32_t>(tuple), /*keep_order=*/true);
            CHECK(rank(as_set) == dim);
            seen.insert(std::move(tuple));
        });
        CHECK(seen.size() == gl2_order(dim));
    }
}

TEST_CASE("canonical_form is idempotent and constant on orbits") {
    std::mt19937_64 rng(1123581321);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 2 + int(rng() % 3);  // 2 .. 4
        const ConnectionSet C = testutil::random_set(rng, dim);
        const ConnectionSet canon = canonical_form(C);
        CHECK(canonical_form(canon).elems == canon.elems);

        // random basis change: a few transvections applied elementwise
        std::vector<uint32_t> moved = C.elems;
        for (int s = 0; s < 6; ++s) {
            const int i = int(rng() % dim);
            int j = int(rng() % dim);
            if (i == j) j = (j + 1) % dim;
            for (uint32_t& v : moved)
                if ((v >> j) & 1) v ^= uint32_t{1} << i;
        }
        const ConnectionSet Cm = ConnectionSet::make(dim, std::move(moved));
        CHECK(canonical_form(Cm).elems == canon.elems);
    }
    CHECK_THROWS_AS(canonical_form(power(example_graph(), 2)),
                    std::invalid_argument);
}

TEST_CASE("small-dimension censuses match the brute-force counts") {
    // constraint A = even, not doubly even, self-orthogonal
    for (int dim = 1; dim <= 4; ++dim) {
        const CensusResult a =
            enumerate_census(dim, CensusConstraint::even_not_doubly_even_self_orth);
        CHECK(a.orbit_reps.empty());
        CHECK(a.raw_spanning == 0);
        CHECK(a.raw_nonspanning == 0);
        CHECK(a.nonspanning_orbits == 0);
    }
    // constraint B = doubly even: nothing below dim 3
    for (int dim = 1; dim <= 2; ++dim) {
        const CensusResult b = enumerate_census(dim, CensusConstraint::doubly_even);
        CHECK(b.orbit_reps.empty());
        CHECK(b.raw_spanning == 0);
        CHECK(b.raw_nonspanning == 0);
    }

    const CensusResult b3 = enumerate_census(3, CensusConstraint::doubly_even);
    REQUIRE(b3.orbit_reps.size() == 1);
    CHECK(b3.raw_spanning == 1);
    CHECK(b3.raw_nonspanning == 0);
    CHECK(b3.orbit_sizes == std::vector<uint64_t>{1});
    CHECK(b3.valencies == std::vector<int>{7});
    CHECK(b3.orbit_reps[0].elems == testutil::simplex(3).elems);
    CHECK(b3.complement_pairing.empty());  // complement of the full set is empty

    const CensusResult b4 = enumerate_census(4, CensusConstraint::doubly_even);
    REQUIRE(b4.orbit_reps.size() == 2);
    CHECK(b4.raw_spanning == 16);
    CHECK(b4.valencies == std::vector<int>{8, 15});
    CHECK(b4.orbit_sizes == std::vector<uint64_t>{15, 1});
    CHECK(b4.raw_nonspanning == 15);
    CHECK(b4.nonspanning_orbits == 1);
    CHECK(b4.complement_pairing.empty());  // complements drop to valency 7 / empty
    CHECK(b4.complement_partner == std::vector<int>{-1, -1});
    CHECK(b4.spanning_masks.size() == 16);
}

TEST_CASE("census survivors are sound and carry no PST") {
    const CensusResult b4 = enumerate_census(4, CensusConstraint::doubly_even);
    for (uint32_t mask : b4.spanning_masks) {
        const ConnectionSet C = set_from_mask(4, mask);
        const CodeProfile p = classify(C);
        CHECK(p.self_orthogonal);
        CHECK(p.doubly_even);
        CHECK(p.spanning);
        CHECK_FALSE(detect_pst(C).occurs);
    }
    // orbit representatives are canonical and lie in their own orbit
    for (const ConnectionSet& rep : b4.orbit_reps)
        CHECK(canonical_form(rep).elems == rep.elems);
}

TEST_CASE("orbit grouping is stable under input order") {
    const CensusResult b4 = enumerate_census(4, CensusConstraint::doubly_even);
    std::vector<uint32_t> masks = b4.spanning_masks;
    std::mt19937_64 rng(31415);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(masks.begin(), masks.end(), rng);
        const OrbitPartition part = orbit_census_masks(masks, 4);
        REQUIRE(part.reps.size() == 2);
        CHECK(part.sizes == std::vector<uint64_t>{15, 1});
        CHECK(std::popcount(part.reps[0]) == 8);
        CHECK(std::popcount(part.reps[1]) == 15);
        for (uint32_t mask : masks) CHECK(part.orbit_index.count(mask) == 1);
    }
}

TEST_CASE("orbit grouping rejects duplicate and non-closed families") {
    const CensusResult b4 = enumerate_census(4, CensusConstraint::doubly_even);
    std::vector<uint32_t> masks = b4.spanning_masks;

    std::vector<uint32_t> dup = masks;
    dup.push_back(masks.front());
    CHECK_THROWS_AS(orbit_census_masks(dup, 4), std::invalid_argument);

    // removing one member of the 15-element orbit breaks closure
    std::vector<uint32_t> holed = masks;
    const auto victim =
        std::find_if(holed.begin(), holed.end(),
                     [](uint32_t m) { return std::popcount(m) == 8; });
    REQUIRE(victim != holed.end());
    holed.erase(victim);
    CHECK_THROWS_AS(orbit_census_masks(holed, 4), std::logic_error);
}

TEST_CASE("orbit_census sizes whole orbits even from single seeds") {
    // a GL-fixed set: the full simplex
    const CensusResult s4 = orbit_census({testutil::simplex(4)}, 4,
                                         CensusConstraint::doubly_even);
    REQUIRE(s4.orbit_reps.size() == 1);
    CHECK(s4.orbit_sizes == std::vector<uint64_t>{1});
    CHECK(s4.valencies == std::vector<int>{15});
    CHECK(s4.raw_spanning == 1);

    // a generic seed: the 3-cube basis, whose orbit is the 28 bases of F_2^3
    const CensusResult h3 = orbit_census(
        {hypercube(3)}, 3, CensusConstraint::even_not_doubly_even_self_orth);
    REQUIRE(h3.orbit_reps.size() == 1);
    CHECK(h3.orbit_sizes == std::vector<uint64_t>{28});
    CHECK(h3.valencies == std::vector<int>{3});
    CHECK(h3.orbit_reps[0].elems == std::vector<uint32_t>{1, 2, 4});

    // a family covering an orbit only partially is the predicate-bug signal
    ConnectionSet tv = hypercube(3);
    tv.elems[0] = 3;  // transvection image of the basis: {3, 2, 4}
    CHECK_THROWS_AS(
        orbit_census({hypercube(3), ConnectionSet::make(3, tv.elems)}, 3,
                     CensusConstraint::even_not_doubly_even_self_orth),
        std::logic_error);

    CHECK_THROWS_AS(orbit_census({ConnectionSet::make(3, {1, 2, 3})}, 3,
                                 CensusConstraint::doubly_even),
                    std::invalid_argument);  // does not span
    CHECK_THROWS_AS(
        orbit_census({hypercube(3), hypercube(3)}, 3,
                     CensusConstraint::doubly_even),
        std::invalid_argument);  // duplicate
}

TEST_CASE("orbit_census pairs complement-closed families perfectly") {
    const ConnectionSet cube = hypercube(3);
    const ConnectionSet co = complement(cube);
    const CensusResult res = orbit_census(
        {cube, co}, 3, CensusConstraint::even_not_doubly_even_self_orth);
    REQUIRE(res.orbit_reps.size() == 2);
    CHECK(res.valencies == std::vector<int>{3, 4});
    CHECK(res.complement_partner == std::vector<int>{1, 0});
    REQUIRE(res.complement_pairing.size() == 1);
    CHECK(res.complement_pairing[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("orbit_census matches enumerate_census on a closed family") {
    const CensusResult scan = enumerate_census(4, CensusConstraint::doubly_even);
    std::vector<ConnectionSet> family;
    for (uint32_t mask : scan.spanning_masks)
        family.push_back(set_from_mask(4, mask));
    const CensusResult grouped =
        orbit_census(family, 4, CensusConstraint::doubly_even);
    REQUIRE(grouped.orbit_reps.size() == scan.orbit_reps.size());
    for (size_t k = 0; k < grouped.orbit_reps.size(); ++k) {
        CHECK(grouped.orbit_reps[k].elems == scan.orbit_reps[k].elems);
        CHECK(grouped.orbit_sizes[k] == scan.orbit_sizes[k]);
    }
    CHECK(grouped.raw_spanning == scan.raw_spanning);
}
