// GF(2) core: bit vectors, connection sets, codewords, weight
// distributions, and the algebraic identities everything else rests on.

#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"

#include "cubelike/construct.hpp"
#include "cubelike/gf2.hpp"
#include "helpers.hpp"

using namespace cubelike;

TEST_CASE("dim_mask covers the whole supported range") {
    CHECK(dim_mask(1) == 1u);
    CHECK(dim_mask(5) == 31u);
    CHECK(dim_mask(31) == 0x7fffffffu);
    CHECK(dim_mask(32) == 0xffffffffu);
}

TEST_CASE("dot is the parity of the AND") {
    CHECK(dot(1, 1));
    CHECK_FALSE(dot(1, 2));
    CHECK(dot(6, 2));
    CHECK_FALSE(dot(3, 3));
    CHECK_FALSE(dot(7, 5));
    CHECK(dot(0xffffffffu, 0x80000000u));
}

TEST_CASE("BitVec validates dimension and range") {
    CHECK_THROWS_AS(BitVec(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(33, 0), std::invalid_argument);
    CHECK_THROWS_AS(BitVec(3, 8), std::invalid_argument);
    CHECK_NOTHROW(BitVec(3, 7));
    CHECK_NOTHROW(BitVec(32, 0xffffffffu));
    CHECK(BitVec(5, 21).weight() == 3);
    CHECK(BitVec(5, 0).zero());
    CHECK((BitVec(4, 5) ^ BitVec(4, 3)).bits == 6);
    CHECK_THROWS_AS(BitVec(4, 1) ^ BitVec(5, 1), std::invalid_argument);
}

TEST_CASE("ConnectionSet::make sorts, validates, optionally keeps order") {
    const ConnectionSet C = ConnectionSet::make(3, {4, 1, 2});
    CHECK(C.elems == std::vector<uint32_t>{1, 2, 4});
    const ConnectionSet K = ConnectionSet::make(3, {4, 1, 2}, /*keep_order=*/true);
    CHECK(K.elems == std::vector<uint32_t>{4, 1, 2});
    CHECK(K.element(0) == BitVec(3, 4));

    CHECK_THROWS_AS(ConnectionSet::make(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(ConnectionSet::make(3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ConnectionSet::make(3, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(ConnectionSet::make(3, {8}), std::invalid_argument);
    CHECK_THROWS_AS(ConnectionSet::make(0, {1}), std::invalid_argument);
}

TEST_CASE("codeword of the identity matrix is the vector itself") {
    const ConnectionSet cube = hypercube(3);
    const Codeword cw = codeword(cube, BitVec(3, 6));  // bit string 011
    CHECK(cw.length == 3);
    CHECK_FALSE(cw.bit(0));
    CHECK(cw.bit(1));
    CHECK(cw.bit(2));
    CHECK(cw.weight() == 2);
}

TEST_CASE("codewords of the bundled example graph") {
    const ConnectionSet ex = example_graph();
    CHECK(ex.dim == 5);
    CHECK(ex.m() == 11);

    // a = e5 picks out row 5 of M: columns alternate 1 0 1 0 ...
    const Codeword row5 = codeword(ex, BitVec(5, 16));
    for (int j = 0; j < 11; ++j) CHECK(row5.bit(j) == (j % 2 == 0));
    CHECK(row5.weight() == 6);
    CHECK(codeword_weight(ex, BitVec(5, 16)) == 6);
    CHECK(codeword_weight(ex, BitVec(5, 1)) == 4);
    CHECK(codeword_weight(ex, BitVec(5, 0)) == 0);
    CHECK_THROWS_AS(codeword_weight(ex, BitVec(4, 1)), std::invalid_argument);
}

TEST_CASE("matrix_rows transposes the element list") {
    const ConnectionSet ex = example_graph();
    const std::vector<Codeword> rows = matrix_rows(ex);
    REQUIRE(rows.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(rows[i].length == 11);
        for (int j = 0; j < 11; ++j)
            CHECK(rows[i].bit(j) == (((ex.elems[j] >> i) & 1) != 0));
    }
    // row weights of the example: (4, 4, 4, 4, 6)
    const int want[5] = {4, 4, 4, 4, 6};
    for (int i = 0; i < 5; ++i) CHECK(rows[i].weight() == want[i]);
}

TEST_CASE("codeword map is linear and satisfies the weight identity") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 40; ++trial) {
        const int dim = 2 + int(rng() % 5);  // 2 .. 6
        const ConnectionSet C = testutil::random_set(rng, dim);
        const uint32_t a = uint32_t(rng()) & dim_mask(dim);
        const uint32_t b = uint32_t(rng()) & dim_mask(dim);

        // linearity: (a + b)^T M = a^T M + b^T M
        const Codeword ca = codeword(C, BitVec(dim, a));
        const Codeword cb = codeword(C, BitVec(dim, b));
        const Codeword cab = codeword(C, BitVec(dim, a ^ b));
        for (size_t k = 0; k < cab.words.size(); ++k)
            CHECK(cab.words[k] == (ca.words[k] ^ cb.words[k]));

        // wt(x + y) = wt x + wt y - 2 |supp x & supp y|
        const int overlap = testutil::support_overlap(C, a, b);
        CHECK(cab.weight() == ca.weight() + cb.weight() - 2 * overlap);
    }
}

TEST_CASE("codeword_weights_all equals per-codeword recomputation") {
    std::mt19937_64 rng(117);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 1 + int(rng() % 6);  // 1 .. 6
        const ConnectionSet C = testutil::random_set(rng, dim);
        const std::vector<uint32_t> w = codeword_weights_all(C);
        REQUIRE(w.size() == (size_t{1} << dim));
        for (uint32_t a = 0; a < w.size(); ++a)
            CHECK(int(w[a]) == codeword_weight(C, BitVec(dim, a)));
    }
}

TEST_CASE("weight distributions of the stock graphs") {
    const WeightDistribution cube = weight_distribution(hypercube(4));
    CHECK(cube.m == 4);
    CHECK(cube.total == 16);
    const std::map<int, uint64_t> binom{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}};
    CHECK(cube.counts == binom);

    const WeightDistribution ex = weight_distribution(example_graph());
    const std::map<int, uint64_t> ex_want{{0, 1}, {4, 10}, {6, 16}, {8, 5}};
    CHECK(ex.counts == ex_want);
    CHECK(ex.m == 11);
    CHECK(ex.total == 32);

    const WeightDistribution s3 = weight_distribution(testutil::simplex(3));
    const std::map<int, uint64_t> s3_want{{0, 1}, {4, 7}};
    CHECK(s3.counts == s3_want);
}

TEST_CASE("weight distribution counts always total 2^dim") {
    std::mt19937_64 rng(411);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 1 + int(rng() % 6);
        const ConnectionSet C = testutil::random_set(rng, dim);
        const WeightDistribution wd = weight_distribution(C);
        uint64_t sum = 0;
        for (const auto& [k, cnt] : wd.counts) sum += cnt;
        CHECK(sum == (uint64_t{1} << dim));
        CHECK(wd.counts.at(0) >= 1);
    }
}

TEST_CASE("divisor of the stock graphs") {
    CHECK(divisor(hypercube(5)) == 1);
    CHECK(divisor(example_graph()) == 2);
    CHECK(divisor(testutil::simplex(3)) == 4);
    CHECK(divisor(testutil::simplex(4)) == 8);
}

TEST_CASE("divisor divides every nonzero codeword weight") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 1 + int(rng() % 6);
        const ConnectionSet C = testutil::random_set(rng, dim);
        const int D = divisor(C);
        CHECK(D >= 1);
        for (const auto& [k, cnt] : weight_distribution(C).counts)
            if (k != 0) CHECK(k % D == 0);
    }
}

TEST_CASE("sigma is the XOR of the connection set") {
    CHECK(sigma(hypercube(2)) == BitVec(2, 3));
    CHECK(sigma(hypercube(4)) == BitVec(4, 15));
    CHECK(sigma(example_graph()).zero());
    CHECK(sigma(ConnectionSet::make(5, {21})) == BitVec(5, 21));
}

TEST_CASE("bit i of sigma is the parity of wt(e_{i+1}^T M)") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 1 + int(rng() % 6);
        const ConnectionSet C = testutil::random_set(rng, dim);
        const BitVec s = sigma(C);
        for (int i = 0; i < dim; ++i) {
            const int w = codeword_weight(C, BitVec(dim, uint32_t{1} << i));
            CHECK(((s.bits >> i) & 1) == uint32_t(w & 1));
        }
    }
}

TEST_CASE("rank and spans") {
    CHECK(rank(hypercube(5)) == 5);
    CHECK(spans(hypercube(5)));
    CHECK(rank(example_graph()) == 5);
    CHECK(spans(example_graph()));

    const ConnectionSet flat = ConnectionSet::make(3, {1, 2, 3});
    CHECK(rank(flat) == 2);
    CHECK_FALSE(spans(flat));

    const ConnectionSet one = ConnectionSet::make(4, {9});
    CHECK(rank(one) == 1);
}

TEST_CASE("whole-space sweeps reject dims over the walk cap") {
    std::vector<uint32_t> e{1};
    const ConnectionSet big = ConnectionSet::make(25, std::move(e));
    CHECK_THROWS_AS(codeword_weights_all(big), std::invalid_argument);
    CHECK_NOTHROW(codeword(big, BitVec(25, 3)));  // per-element ops still fine
}
