// Shared fixtures for the unit tests: simplex sets, reproducible random
// connection sets, and a from-scratch support-intersection helper used
// to cross-check the fast condition paths.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cubelike/gf2.hpp"

namespace testutil {

// All 2^dim - 1 nonzero vectors.
inline cubelike::ConnectionSet simplex(int dim) {
    std::vector<uint32_t> e;
    for (uint32_t v = 1; v < (uint32_t{1} << dim); ++v) e.push_back(v);
    return cubelike::ConnectionSet::make(dim, std::move(e));
}

// Uniformly random nonempty subset of Z_2^dim \ {0}.
inline cubelike::ConnectionSet random_set(std::mt19937_64& rng, int dim) {
    std::vector<uint32_t> e;
    while (e.empty()) {
        e.clear();
        for (uint32_t v = 1; v < (uint32_t{1} << dim); ++v)
            if (rng() & 1) e.push_back(v);
    }
    return cubelike::ConnectionSet::make(dim, std::move(e));
}

// |supp(a^T M) & supp(b^T M)| straight from the definitions.
inline int support_overlap(const cubelike::ConnectionSet& C, uint32_t a,
                           uint32_t b) {
    int n = 0;
    for (uint32_t c : C.elems)
        if (cubelike::dot(a, c) && cubelike::dot(b, c)) ++n;
    return n;
}

}  // namespace testutil
