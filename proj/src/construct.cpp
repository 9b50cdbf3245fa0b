#include "cubelike/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubelike {

ConnectionSet hypercube(int d) {
    if (d < 1 || d > kMaxWalkDim)
        throw std::invalid_argument("hypercube: d must be in [1, 24]");
    std::vector<uint32_t> elems(d);
    for (int i = 0; i < d; ++i) elems[i] = 1u << i;
    return ConnectionSet::make(d, std::move(elems));
}

ConnectionSet example_graph() {
    // Columns of the bundled 5 x 11 generator matrix, in bundled order.
    return ConnectionSet::make(
        5, {16, 8, 24, 4, 20, 2, 18, 1, 17, 15, 31}, /*keep_order=*/true);
}

ConnectionSet pst_to_target(const ConnectionSet& C, const BitVec& u) {
    if (u.dim != C.dim)
        throw std::invalid_argument("pst_to_target: dimension mismatch");
    if (u.zero())
        throw std::invalid_argument("pst_to_target: target must be nonzero");
    std::vector<uint32_t> elems = C.elems;
    // Toggling an element x flips sigma by x; two toggles move sigma to
    // any prescribed u while changing the set by at most two elements.
    const auto toggle = [&elems](uint32_t x) {
        auto it = std::find(elems.begin(), elems.end(), x);
        if (it != elems.end())
            elems.erase(it);
        else
            elems.push_back(x);
    };
    uint32_t s = 0;
    for (uint32_t c : elems) s ^= c;
    if (s != u.bits) {
        if (s != 0) toggle(s);
        toggle(u.bits);
    }
    if (elems.empty())
        throw std::invalid_argument(
            "pst_to_target: retargeting would empty the connection set");
    return ConnectionSet::make(C.dim, std::move(elems), /*keep_order=*/true);
}

ConnectionSet complement(const ConnectionSet& C) {
    const uint32_t n = dim_mask(C.dim);  // number of nonzero vectors
    if (static_cast<uint32_t>(C.m()) == n)
        throw std::invalid_argument("complement: connection set is already full");
    std::vector<bool> in(size_t{n} + 1, false);
    for (uint32_t c : C.elems) in[c] = true;
    std::vector<uint32_t> elems;
    elems.reserve(n - C.m());
    for (uint32_t v = 1; v <= n; ++v)
        if (!in[v]) elems.push_back(v);
    return ConnectionSet::make(C.dim, std::move(elems));
}

ConnectionSet direct_sum(const ConnectionSet& a, const ConnectionSet& b) {
    if (a.dim + b.dim > kMaxWalkDim)
        throw std::invalid_argument("direct_sum: combined dim exceeds 24");
    std::vector<uint32_t> elems;
    elems.reserve(size_t{static_cast<size_t>(a.m())} + b.m());
    for (uint32_t c : a.elems) elems.push_back(c);
    for (uint32_t c : b.elems) elems.push_back(c << a.dim);
    return ConnectionSet::make(a.dim + b.dim, std::move(elems),
                               /*keep_order=*/true);
}

ConnectionSet power(const ConnectionSet& C, int k) {
    if (k < 1)
        throw std::invalid_argument("power: k must be >= 1");
    if (k * C.dim > kMaxWalkDim)
        throw std::invalid_argument("power: k * dim exceeds 24");
    ConnectionSet out = C;
    for (int i = 1; i < k; ++i) out = direct_sum(out, C);
    return out;
}

}  // namespace cubelike
