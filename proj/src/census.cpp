#include "cubelike/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace cubelike {

namespace {

constexpr uint64_t kSwarOnes = 0x0101010101010101ull;

int triangular_index(int dim, int i, int j) {
    // pairs (i, j) with 0 <= i <= j < dim, rows of the upper triangle
    // laid out consecutively
    return i * dim - i * (i - 1) / 2 + (j - i);
}

void check_census_dim(int dim, const char* who) {
    if (dim < 1 || dim > kMaxCensusDim)
        throw std::invalid_argument(std::string(who) + ": dim must be in [1, 5]");
}

}  // namespace

uint32_t mask_of(const ConnectionSet& C) {
    check_census_dim(C.dim, "mask_of");
    uint32_t mask = 0;
    for (uint32_t c : C.elems) mask |= 1u << (c - 1);
    return mask;
}

ConnectionSet set_from_mask(int dim, uint32_t mask) {
    check_census_dim(dim, "set_from_mask");
    if (mask == 0)
        throw std::invalid_argument("set_from_mask: empty subset");
    std::vector<uint32_t> elems;
    for (uint32_t t = mask; t; t &= t - 1)
        elems.push_back(static_cast<uint32_t>(std::countr_zero(t)) + 1);
    return ConnectionSet::make(dim, std::move(elems));
}

SubsetScanState::SubsetScanState(int dim) : dim_(dim) {
    check_census_dim(dim, "SubsetScanState");
    npairs_ = dim * (dim + 1) / 2;
    const uint32_t nelems = dim_mask(dim);  // 2^dim - 1
    for (uint32_t v = 1; v <= nelems; ++v) {
        auto& pd = pair_delta_[v - 1];
        auto& wd = w_delta_[v - 1];
        pd = {};
        wd = {};
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j)
                if (((v >> i) & 1) && ((v >> j) & 1)) {
                    const int k = triangular_index(dim, i, j);
                    pd[k >> 3] += uint64_t{1} << ((k & 7) * 8);
                }
        for (uint32_t a = 0; a < (uint32_t{1} << dim); ++a)
            if (dot(a, v)) wd[a >> 3] += uint64_t{1} << ((a & 7) * 8);
    }
}

void SubsetScanState::seed(uint32_t subset_mask) {
    // dim_mask(dim_) = 2^dim - 1 <= 31 elements, so the subset mask must
    // fit below bit 2^dim - 1
    if (subset_mask & ~((uint32_t{1} << dim_mask(dim_)) - 1))
        throw std::invalid_argument("SubsetScanState::seed: mask out of range");
    mask_ = 0;
    size_ = 0;
    pairs_ = {};
    w_ = {};
    for (uint32_t t = subset_mask; t; t &= t - 1)
        toggle(std::countr_zero(t));
}

void SubsetScanState::toggle(int elem_index) {
    if (elem_index < 0 || elem_index >= static_cast<int>(dim_mask(dim_)))
        throw std::invalid_argument("SubsetScanState::toggle: element out of range");
    const uint32_t bit = uint32_t{1} << elem_index;
    const auto& pd = pair_delta_[elem_index];
    const auto& wd = w_delta_[elem_index];
    mask_ ^= bit;
    if (mask_ & bit) {
        ++size_;
        pairs_[0] += pd[0];
        pairs_[1] += pd[1];
        for (int k = 0; k < 4; ++k) w_[k] += wd[k];
    } else {
        --size_;
        pairs_[0] -= pd[0];
        pairs_[1] -= pd[1];
        for (int k = 0; k < 4; ++k) w_[k] -= wd[k];
    }
}

int SubsetScanState::pair_count(int i, int j) const {
    if (i < 0 || j < i || j >= dim_)
        throw std::invalid_argument("SubsetScanState::pair_count: bad pair");
    const int k = triangular_index(dim_, i, j);
    return static_cast<int>((pairs_[k >> 3] >> ((k & 7) * 8)) & 0xFF);
}

bool SubsetScanState::pair_counts_all_even() const {
    return ((pairs_[0] | pairs_[1]) & kSwarOnes) == 0;
}

int SubsetScanState::weight(uint32_t a) const {
    if (a >= (uint32_t{1} << dim_))
        throw std::invalid_argument("SubsetScanState::weight: a out of range");
    return static_cast<int>((w_[a >> 3] >> ((a & 7) * 8)) & 0xFF);
}

int SubsetScanState::weight_gcd() const {
    int g = 0;
    const uint32_t n = uint32_t{1} << dim_;
    for (uint32_t a = 1; a < n; ++a)
        g = std::gcd(g, static_cast<int>((w_[a >> 3] >> ((a & 7) * 8)) & 0xFF));
    return g;
}

namespace {

// GF(2) rank of the vectors named by a subset mask.
int mask_rank(uint32_t mask, int dim) {
    uint32_t basis[kMaxCensusDim] = {0};
    int r = 0;
    for (uint32_t t = mask; t; t &= t - 1) {
        uint32_t v = static_cast<uint32_t>(std::countr_zero(t)) + 1;
        while (v) {
            const int h = 31 - std::countl_zero(v);
            if (!basis[h]) {
                basis[h] = v;
                if (++r == dim) return r;
                break;
            }
            v ^= basis[h];
        }
    }
    return r;
}

// Scans Gray-code steps [begin, end): visits subsets g(begin) ..
// g(end - 1), appending survivor masks in visit order.
void scan_range(int dim, CensusConstraint cons, uint64_t begin, uint64_t end,
                std::vector<uint32_t>& span_out,
                std::vector<uint32_t>& nonspan_out) {
    SubsetScanState st(dim);
    const auto gray = [](uint64_t n) {
        return static_cast<uint32_t>(n ^ (n >> 1));
    };
    st.seed(gray(begin));
    const auto check = [&]() {
        if (!st.pair_counts_all_even()) return;
        const int D = st.weight_gcd();
        if (D == 0) return;  // empty subset
        const bool wanted = cons == CensusConstraint::doubly_even
                                ? (D % 4 == 0)
                                : (D % 4 == 2);
        if (!wanted) return;
        if (mask_rank(st.mask(), dim) == dim)
            span_out.push_back(st.mask());
        else
            nonspan_out.push_back(st.mask());
    };
    check();
    for (uint64_t step = begin + 1; step < end; ++step) {
        st.toggle(std::countr_zero(step));
        check();
    }
}

}  // namespace

ScanProgress scan_begin(int dim, CensusConstraint constraint) {
    check_census_dim(dim, "scan_begin");
    ScanProgress sp;
    sp.dim = dim;
    sp.constraint = constraint;
    sp.next_step = 0;
    sp.total_steps = uint64_t{1} << (dim_mask(dim));  // 2^(2^dim - 1)
    return sp;
}

void scan_advance(ScanProgress& sp, uint64_t max_steps, int threads) {
    if (sp.done() || max_steps == 0) return;
    const uint64_t begin = sp.next_step;
    const uint64_t end = std::min(sp.total_steps, begin + max_steps);
    const int nw = std::max(1, std::min<int>(threads, 64));
    if (nw == 1 || end - begin < 1024) {
        scan_range(sp.dim, sp.constraint, begin, end, sp.spanning,
                   sp.nonspanning);
    } else {
        std::vector<std::vector<uint32_t>> span(nw), nonspan(nw);
        std::vector<std::thread> workers;
        const uint64_t chunk = (end - begin + nw - 1) / nw;
        for (int k = 0; k < nw; ++k) {
            const uint64_t b = begin + chunk * k;
            const uint64_t e = std::min(end, b + chunk);
            if (b >= e) break;
            workers.emplace_back([&, k, b, e]() {
                scan_range(sp.dim, sp.constraint, b, e, span[k], nonspan[k]);
            });
        }
        for (auto& w : workers) w.join();
        // merge in range order: the result never depends on scheduling
        for (int k = 0; k < nw; ++k) {
            sp.spanning.insert(sp.spanning.end(), span[k].begin(), span[k].end());
            sp.nonspanning.insert(sp.nonspanning.end(), nonspan[k].begin(),
                                  nonspan[k].end());
        }
    }
    sp.next_step = end;
}

namespace {

constexpr char kCheckpointMagic[4] = {'C', 'B', 'C', 'P'};
constexpr uint32_t kCheckpointVersion = 1;

uint64_t fnv1a(const uint8_t* data, size_t n) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < n; ++i) {
        h ^= data[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

template <typename T>
void put(std::vector<uint8_t>& buf, T v) {
    // little-endian, fixed width
    for (size_t i = 0; i < sizeof(T); ++i)
        buf.push_back(static_cast<uint8_t>((static_cast<uint64_t>(v) >> (8 * i)) & 0xFF));
}

template <typename T>
T take(const std::vector<uint8_t>& buf, size_t& off) {
    if (off + sizeof(T) > buf.size())
        throw std::runtime_error("checkpoint: truncated file");
    uint64_t v = 0;
    for (size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<uint64_t>(buf[off + i]) << (8 * i);
    off += sizeof(T);
    return static_cast<T>(v);
}

}  // namespace

void save_checkpoint(const std::string& path, const ScanProgress& sp) {
    std::vector<uint8_t> payload;
    put<uint32_t>(payload, kCheckpointVersion);
    put<uint32_t>(payload, static_cast<uint32_t>(sp.dim));
    put<uint32_t>(payload, static_cast<uint32_t>(sp.constraint));
    put<uint64_t>(payload, sp.total_steps);
    put<uint64_t>(payload, sp.next_step);
    put<uint64_t>(payload, sp.spanning.size());
    put<uint64_t>(payload, sp.nonspanning.size());
    for (uint32_t m : sp.spanning) put<uint32_t>(payload, m);
    for (uint32_t m : sp.nonspanning) put<uint32_t>(payload, m);

    std::vector<uint8_t> buf;
    buf.insert(buf.end(), kCheckpointMagic, kCheckpointMagic + 4);
    buf.insert(buf.end(), payload.begin(), payload.end());
    put<uint64_t>(buf, fnv1a(payload.data(), payload.size()));

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("checkpoint: cannot write " + tmp);
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size()));
        if (!out)
            throw std::runtime_error("checkpoint: short write to " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

ScanProgress load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
    std::vector<uint8_t> buf((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
    if (buf.size() < 12 || std::memcmp(buf.data(), kCheckpointMagic, 4) != 0)
        throw std::runtime_error("checkpoint: bad magic in " + path);
    const size_t payload_len = buf.size() - 4 - 8;
    size_t off = buf.size() - 8;
    const uint64_t want = take<uint64_t>(buf, off);
    if (fnv1a(buf.data() + 4, payload_len) != want)
        throw std::runtime_error("checkpoint: checksum mismatch in " + path);

    off = 4;
    const uint32_t version = take<uint32_t>(buf, off);
    if (version != kCheckpointVersion)
        throw std::runtime_error("checkpoint: unsupported version");
    ScanProgress sp;
    sp.dim = static_cast<int>(take<uint32_t>(buf, off));
    check_census_dim(sp.dim, "load_checkpoint");
    const uint32_t cons = take<uint32_t>(buf, off);
    if (cons > 1) throw std::runtime_error("checkpoint: bad constraint tag");
    sp.constraint = static_cast<CensusConstraint>(cons);
    sp.total_steps = take<uint64_t>(buf, off);
    sp.next_step = take<uint64_t>(buf, off);
    const uint64_t nspan = take<uint64_t>(buf, off);
    const uint64_t nnon = take<uint64_t>(buf, off);
    if (sp.total_steps != (uint64_t{1} << dim_mask(sp.dim)) ||
        sp.next_step > sp.total_steps)
        throw std::runtime_error("checkpoint: inconsistent scan position");
    sp.spanning.reserve(nspan);
    sp.nonspanning.reserve(nnon);
    for (uint64_t i = 0; i < nspan; ++i)
        sp.spanning.push_back(take<uint32_t>(buf, off));
    for (uint64_t i = 0; i < nnon; ++i)
        sp.nonspanning.push_back(take<uint32_t>(buf, off));
    return sp;
}

uint64_t gl2_order(int dim) {
    check_census_dim(dim, "gl2_order");
    uint64_t order = 1;
    const uint64_t n = uint64_t{1} << dim;
    for (int i = 0; i < dim; ++i) order *= n - (uint64_t{1} << i);
    return order;
}

namespace {

// Streams all invertible column tuples (cols[i] = g e_i) by extending a
// partial tuple with any vector outside the current span.  Deterministic
// ascending order; the span is tracked as a bitset over Z_2^dim.
template <typename Fn>
void visit_gl2_impl(int dim, Fn&& fn) {
    std::array<uint32_t, 5> cols{};
    const uint32_t nvec = uint32_t{1} << dim;
    uint32_t span[6];
    span[0] = 1;  // {0}
    const auto rec = [&](auto&& self, int depth) -> void {
        if (depth == dim) {
            fn(static_cast<const std::array<uint32_t, 5>&>(cols));
            return;
        }
        for (uint32_t v = 1; v < nvec; ++v) {
            if ((span[depth] >> v) & 1) continue;
            cols[depth] = v;
            uint32_t ns = span[depth];
            for (uint32_t t = span[depth]; t; t &= t - 1)
                ns |= uint32_t{1} << (std::countr_zero(t) ^ v);
            span[depth + 1] = ns;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

// Sorted-element-list lexicographic order on same-size subsets: A < B
// iff the smallest element where they differ belongs to A.
bool mask_lex_less(uint32_t a, uint32_t b) {
    if (a == b) return false;
    const uint32_t diff = a ^ b;
    return (a & (diff & (~diff + 1))) != 0;
}

uint32_t apply_cols(const std::array<uint32_t, 5>& cols, int dim,
                    uint32_t mask) {
    // image of every vector, built incrementally: img[x] = img[x - low] ^ cols[low]
    uint32_t img[32];
    img[0] = 0;
    const uint32_t nvec = uint32_t{1} << dim;
    for (uint32_t x = 1; x < nvec; ++x)
        img[x] = img[x & (x - 1)] ^ cols[std::countr_zero(x)];
    uint32_t out = 0;
    for (uint32_t t = mask; t; t &= t - 1)
        out |= uint32_t{1} << (img[std::countr_zero(t) + 1] - 1);
    return out;
}

}  // namespace

void visit_gl2(int dim,
               const std::function<void(const std::array<uint32_t, 5>&)>& fn) {
    check_census_dim(dim, "visit_gl2");
    visit_gl2_impl(dim, fn);
}

ConnectionSet canonical_form(const ConnectionSet& C) {
    check_census_dim(C.dim, "canonical_form");
    const uint32_t mask = mask_of(C);
    uint32_t best = mask;
    visit_gl2_impl(C.dim, [&](const std::array<uint32_t, 5>& cols) {
        const uint32_t img = apply_cols(cols, C.dim, mask);
        if (mask_lex_less(img, best)) best = img;
    });
    return set_from_mask(C.dim, best);
}

OrbitPartition orbit_census_masks(const std::vector<uint32_t>& masks, int dim) {
    check_census_dim(dim, "orbit_census_masks");
    std::unordered_map<uint32_t, int> member;  // mask -> position
    member.reserve(masks.size() * 2);
    for (size_t i = 0; i < masks.size(); ++i)
        if (!member.emplace(masks[i], static_cast<int>(i)).second)
            throw std::invalid_argument("orbit_census: duplicate survivor mask");

    // transvection permutation tables: x_i += x_j sends v to v ^ e_i
    // exactly when bit j of v is set
    struct Transvection {
        int i, j;
    };
    std::vector<Transvection> gens;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j) gens.push_back({i, j});
    const auto apply_gen = [&](const Transvection& g, uint32_t mask_in) {
        uint32_t out = 0;
        for (uint32_t t = mask_in; t; t &= t - 1) {
            uint32_t v = static_cast<uint32_t>(std::countr_zero(t)) + 1;
            if ((v >> g.j) & 1) v ^= uint32_t{1} << g.i;
            out |= uint32_t{1} << (v - 1);
        }
        return out;
    };

    std::vector<int> orbit_of(masks.size(), -1);
    std::vector<uint32_t> reps;
    std::vector<uint64_t> sizes;
    std::vector<uint32_t> queue;
    for (size_t seed = 0; seed < masks.size(); ++seed) {
        if (orbit_of[seed] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        uint32_t best = masks[seed];
        uint64_t count = 0;
        queue.clear();
        queue.push_back(masks[seed]);
        orbit_of[seed] = id;
        while (!queue.empty()) {
            const uint32_t cur = queue.back();
            queue.pop_back();
            ++count;
            if (mask_lex_less(cur, best)) best = cur;
            for (const Transvection& g : gens) {
                const uint32_t img = apply_gen(g, cur);
                const auto it = member.find(img);
                if (it == member.end())
                    throw std::logic_error(
                        "orbit_census: GL image escapes the survivor family "
                        "(predicate bug)");
                if (orbit_of[it->second] < 0) {
                    orbit_of[it->second] = id;
                    queue.push_back(img);
                }
            }
        }
        reps.push_back(best);
        sizes.push_back(count);
    }

    // sort orbits by (valency, lexicographic rep)
    std::vector<int> order(reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int pa = std::popcount(reps[a]), pb = std::popcount(reps[b]);
        if (pa != pb) return pa < pb;
        return mask_lex_less(reps[a], reps[b]);
    });
    std::vector<int> rank(order.size());
    for (size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);

    OrbitPartition part;
    part.reps.resize(reps.size());
    part.sizes.resize(reps.size());
    for (size_t k = 0; k < order.size(); ++k) {
        part.reps[k] = reps[order[k]];
        part.sizes[k] = sizes[order[k]];
    }
    part.orbit_index.reserve(masks.size() * 2);
    for (size_t i = 0; i < masks.size(); ++i)
        part.orbit_index.emplace(masks[i], rank[orbit_of[i]]);
    return part;
}

namespace {

CensusResult build_result(int dim, CensusConstraint constraint,
                          std::vector<uint32_t> spanning,
                          std::vector<uint32_t> nonspanning) {
    std::sort(spanning.begin(), spanning.end());
    std::sort(nonspanning.begin(), nonspanning.end());
    if (std::adjacent_find(spanning.begin(), spanning.end()) != spanning.end())
        throw std::logic_error("census: duplicate survivor (scan range bug)");

    CensusResult res;
    res.dim = dim;
    res.constraint = constraint;
    res.raw_spanning = spanning.size();
    res.raw_nonspanning = nonspanning.size();
    res.spanning_masks = spanning;

    const OrbitPartition part = orbit_census_masks(spanning, dim);
    uint64_t covered = 0;
    for (size_t k = 0; k < part.reps.size(); ++k) {
        res.orbit_reps.push_back(set_from_mask(dim, part.reps[k]));
        res.orbit_sizes.push_back(part.sizes[k]);
        res.valencies.push_back(std::popcount(part.reps[k]));
        covered += part.sizes[k];
        if (gl2_order(dim) % part.sizes[k] != 0)
            throw std::logic_error("census: orbit size does not divide |GL|");
    }
    if (covered != res.raw_spanning)
        throw std::logic_error("census: orbit sizes do not add up to survivors");

    // complement pairing: complement acts within the spanning survivor
    // family exactly when it stays in the constraint class
    const uint32_t full = (uint32_t{1} << dim_mask(dim)) - 1;
    res.complement_partner.assign(part.reps.size(), -1);
    for (size_t k = 0; k < part.reps.size(); ++k) {
        const uint32_t comp = full ^ part.reps[k];
        if (comp == 0) continue;
        const auto it = part.orbit_index.find(comp);
        if (it == part.orbit_index.end()) continue;
        res.complement_partner[k] = it->second;
    }
    for (size_t k = 0; k < part.reps.size(); ++k) {
        const int p = res.complement_partner[k];
        if (p < 0) continue;
        if (res.complement_partner[p] != static_cast<int>(k))
            throw std::logic_error("census: complement pairing not involutive");
        if (static_cast<int>(k) <= p)
            res.complement_pairing.emplace_back(static_cast<int>(k), p);
    }

    if (!nonspanning.empty()) {
        const OrbitPartition np = orbit_census_masks(nonspanning, dim);
        res.nonspanning_orbits = static_cast<int>(np.reps.size());
    }
    return res;
}

}  // namespace

CensusResult enumerate_census(int dim, CensusConstraint constraint,
                              const CensusOptions& opt) {
    check_census_dim(dim, "enumerate_census");
    ScanProgress sp;
    if (!opt.checkpoint_path.empty() &&
        std::filesystem::exists(opt.checkpoint_path)) {
        sp = load_checkpoint(opt.checkpoint_path);
        if (sp.dim != dim || sp.constraint != constraint)
            throw std::runtime_error(
                "enumerate_census: checkpoint belongs to a different census");
    } else {
        sp = scan_begin(dim, constraint);
    }
    while (!sp.done()) {
        scan_advance(sp, opt.checkpoint_every, opt.threads);
        if (!opt.checkpoint_path.empty()) save_checkpoint(opt.checkpoint_path, sp);
        if (opt.progress) opt.progress(sp.next_step, sp.total_steps);
    }
    return build_result(dim, constraint, std::move(sp.spanning),
                        std::move(sp.nonspanning));
}

CensusResult orbit_census(const std::vector<ConnectionSet>& survivors, int dim,
                          CensusConstraint constraint) {
    check_census_dim(dim, "orbit_census");
    std::vector<uint32_t> input;
    input.reserve(survivors.size());
    for (const ConnectionSet& C : survivors) {
        if (C.dim != dim)
            throw std::invalid_argument("orbit_census: mixed dimensions");
        if (!spans(C))
            throw std::invalid_argument("orbit_census: survivor does not span");
        input.push_back(mask_of(C));
    }
    {
        std::vector<uint32_t> sorted = input;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("orbit_census: duplicate survivor");
    }

    // Full orbit of each seed, streamed from the whole group; later
    // family members falling inside an earlier orbit are absorbed.
    struct Orbit {
        uint32_t rep;
        std::unordered_set<uint32_t> members;
    };
    std::vector<Orbit> orbits;
    std::vector<int> orbit_of(input.size(), -1);
    for (size_t i = 0; i < input.size(); ++i) {
        if (orbit_of[i] >= 0) continue;
        Orbit orb;
        orb.members.reserve(64);
        const uint32_t seed = input[i];
        visit_gl2_impl(dim, [&](const std::array<uint32_t, 5>& cols) {
            orb.members.insert(apply_cols(cols, dim, seed));
        });
        orb.rep = seed;
        for (uint32_t msk : orb.members)
            if (mask_lex_less(msk, orb.rep)) orb.rep = msk;
        const int id = static_cast<int>(orbits.size());
        uint64_t present = 0;
        for (size_t k = 0; k < input.size(); ++k)
            if (orb.members.count(input[k])) {
                orbit_of[k] = id;
                ++present;
            }
        if (present != 1 && present != orb.members.size())
            throw std::logic_error(
                "orbit_census: survivor family covers part of an orbit "
                "(predicate bug)");
        orbits.push_back(std::move(orb));
    }

    std::vector<int> order(orbits.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int pa = std::popcount(orbits[a].rep);
        const int pb = std::popcount(orbits[b].rep);
        if (pa != pb) return pa < pb;
        return mask_lex_less(orbits[a].rep, orbits[b].rep);
    });

    CensusResult res;
    res.dim = dim;
    res.constraint = constraint;
    res.raw_spanning = input.size();
    res.spanning_masks = input;
    std::sort(res.spanning_masks.begin(), res.spanning_masks.end());
    for (int id : order) {
        res.orbit_reps.push_back(set_from_mask(dim, orbits[id].rep));
        res.orbit_sizes.push_back(orbits[id].members.size());
        res.valencies.push_back(std::popcount(orbits[id].rep));
        if (gl2_order(dim) % orbits[id].members.size() != 0)
            throw std::logic_error("census: orbit size does not divide |GL|");
    }

    const uint32_t full = (uint32_t{1} << dim_mask(dim)) - 1;
    res.complement_partner.assign(order.size(), -1);
    for (size_t k = 0; k < order.size(); ++k) {
        const uint32_t comp = full ^ orbits[order[k]].rep;
        if (comp == 0) continue;
        for (size_t j = 0; j < order.size(); ++j)
            if (orbits[order[j]].members.count(comp)) {
                res.complement_partner[k] = static_cast<int>(j);
                break;
            }
    }
    for (size_t k = 0; k < order.size(); ++k) {
        const int p = res.complement_partner[k];
        if (p < 0) continue;
        if (res.complement_partner[p] != static_cast<int>(k))
            throw std::logic_error("census: complement pairing not involutive");
        if (static_cast<int>(k) <= p)
            res.complement_pairing.emplace_back(static_cast<int>(k), p);
    }
    return res;
}

}  // namespace cubelike
