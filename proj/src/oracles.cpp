#include "p2f/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "p2f/errors.hpp"

namespace p2f {
namespace {

constexpr int kOracleCap = 24;

uint32_t bit(int v) { return uint32_t{1} << v; }

void check_budget(const Graph& g, int budget, const char* who) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument(std::string(who) + ": empty graph");
    if (n > budget || n > kOracleCap)
        throw BudgetError(std::string(who) + ": n=" + std::to_string(n) + " exceeds oracle budget " +
                          std::to_string(std::min(budget, kOracleCap)));
}

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) adj[v] |= bit(u);
    return adj;
}

// Memoized test: does the subgraph induced by `mask` admit a spanning
// disjoint-cycle cover? Decomposition is recovered on demand by
// re-walking the memoized recursion.
class CycleCoverIndex {
public:
    explicit CycleCoverIndex(const Graph& g) : n_(g.vertex_count()), adj_(adjacency_masks(g)), memo_(size_t{1} << n_, kUnknown) {}

    bool feasible(uint32_t mask) {
        if (mask == 0) return true;
        int8_t& slot = memo_[mask];
        if (slot != kUnknown) return slot == 1;
        bool ok = false;
        // Every covered vertex needs two neighbors inside the mask.
        uint32_t rest = mask;
        bool degree_ok = true;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(adj_[v] & mask) < 2) {
                degree_ok = false;
                break;
            }
        }
        if (degree_ok) {
            int v = std::countr_zero(mask);
            std::vector<int> path{v};
            ok = search_cycles(mask, v, bit(v), path, nullptr);
        }
        slot = ok ? 1 : 0;
        return ok;
    }

    /// Cycle decomposition of a feasible mask (deterministic).
    std::vector<std::vector<int>> decompose(uint32_t mask) {
        std::vector<std::vector<int>> out;
        while (mask) {
            if (!feasible(mask)) throw InternalError("cycle cover decompose: infeasible mask");
            int v = std::countr_zero(mask);
            std::vector<int> path{v};
            std::vector<int> found;
            if (!search_cycles(mask, v, bit(v), path, &found))
                throw InternalError("cycle cover decompose: no cycle re-found");
            uint32_t used = 0;
            for (int u : found) used |= bit(u);
            out.push_back(std::move(found));
            mask &= ~used;
        }
        return out;
    }

private:
    static constexpr int8_t kUnknown = -1;

    // DFS over simple cycles through the smallest vertex of `mask`; a
    // cycle closes when the walk returns to the root with length >= 3.
    // Each cycle is enumerated once (second vertex below closing
    // vertex). Returns true as soon as one cycle leaves a feasible rest.
    bool search_cycles(uint32_t mask, int root, uint32_t on_path, std::vector<int>& path,
                       std::vector<int>* out_cycle) {
        int v = path.back();
        uint32_t candidates = adj_[v] & mask & ~on_path;
        if (path.size() >= 3 && (adj_[v] & bit(root)) && path[1] < v) {
            if (feasible(mask & ~on_path)) {
                if (out_cycle) *out_cycle = path;
                return true;
            }
        }
        while (candidates) {
            int u = std::countr_zero(candidates);
            candidates &= candidates - 1;
            path.push_back(u);
            bool done = search_cycles(mask, root, on_path | bit(u), path, out_cycle);
            path.pop_back();
            if (done) return true;
        }
        return false;
    }

    int n_;
    std::vector<uint32_t> adj_;
    std::vector<int8_t> memo_;
};

// mm[mask] = maximum matching size of the subgraph induced by mask.
std::vector<int8_t> matching_table(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    std::vector<int8_t> mm(size_t{1} << n, 0);
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        int v = std::countr_zero(mask);
        uint32_t rest = mask & ~bit(v);
        int best = mm[rest];
        uint32_t mates = adj[v] & rest;
        while (mates) {
            int u = std::countr_zero(mates);
            mates &= mates - 1;
            best = std::max(best, 1 + mm[rest & ~bit(u)]);
        }
        mm[mask] = int8_t(best);
    }
    return mm;
}

std::vector<std::pair<int, int>> matching_edges(const Graph& g, const std::vector<int8_t>& mm, uint32_t mask) {
    auto adj = adjacency_masks(g);
    std::vector<std::pair<int, int>> out;
    while (mask) {
        int v = std::countr_zero(mask);
        uint32_t rest = mask & ~bit(v);
        if (mm[mask] == mm[rest]) {
            mask = rest;
            continue;
        }
        uint32_t mates = adj[v] & rest;
        bool matched = false;
        while (mates) {
            int u = std::countr_zero(mates);
            mates &= mates - 1;
            if (1 + mm[rest & ~bit(u)] == mm[mask]) {
                out.emplace_back(v, u);
                mask = rest & ~bit(u);
                matched = true;
                break;
            }
        }
        if (!matched) throw InternalError("matching reconstruction failed");
    }
    return out;
}

// Ascending enumeration of masks with a fixed popcount (Gosper).
template <typename F>
void for_each_mask_of_size(int n, int k, F&& f) {
    if (k == 0) {
        f(uint32_t{0});
        return;
    }
    if (k > n) return;
    uint32_t mask = (uint32_t{1} << k) - 1;
    uint32_t limit = uint32_t{1} << n;
    while (mask < limit) {
        if (!f(mask)) return;
        uint32_t c = mask & -mask;
        uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

PseudoTwoFactor assemble_factor(const Graph& g, const std::vector<std::vector<int>>& cycles,
                                const std::vector<std::pair<int, int>>& matched, uint32_t singles) {
    PseudoTwoFactor factor;
    for (const auto& c : cycles) factor.components.push_back({ComponentKind::Cycle, c});
    auto sorted = matched;
    for (auto& e : sorted)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    for (auto [u, v] : sorted) factor.components.push_back({ComponentKind::Edge, {u, v}});
    while (singles) {
        int v = std::countr_zero(singles);
        singles &= singles - 1;
        factor.components.push_back({ComponentKind::Singleton, {v}});
    }
    factor.non_cycle_count = int(factor.components.size() - cycles.size());
    (void)g;
    return factor;
}

}  // namespace

std::pair<int, PseudoTwoFactor> oracle_min_non_cycle(const Graph& g, int budget) {
    check_budget(g, budget, "oracle_min_non_cycle");
    const int n = g.vertex_count();
    const uint32_t full = (n == 32) ? ~uint32_t{0} : (uint32_t{1} << n) - 1;

    CycleCoverIndex cover(g);
    auto mm = matching_table(g);

    // A factor with t non-cycle components leaves a set T uncovered by
    // cycles with |T| - nu(G[T]) = t, hence t <= |T| <= 2t.
    for (int t = 0; t <= n; ++t) {
        for (int size = t; size <= std::min(2 * t, n); ++size) {
            uint32_t found = 0;
            bool hit = false;
            for_each_mask_of_size(n, size, [&](uint32_t mask) {
                if (size - mm[mask] == t && cover.feasible(full & ~mask)) {
                    found = mask;
                    hit = true;
                    return false;
                }
                return true;
            });
            if (hit) {
                auto cycles = cover.decompose(full & ~found);
                auto matched = matching_edges(g, mm, found);
                uint32_t singles = found;
                for (auto [u, v] : matched) singles &= ~(bit(u) | bit(v));
                auto factor = assemble_factor(g, cycles, matched, singles);
                if (factor.non_cycle_count != t) throw InternalError("oracle_min_non_cycle: count mismatch");
                return {t, factor};
            }
        }
    }
    throw InternalError("oracle_min_non_cycle: no factor found");
}

std::pair<int, OrientedCyclePacking> oracle_max_two_regular(const Graph& g, int budget) {
    check_budget(g, budget, "oracle_max_two_regular");
    const int n = g.vertex_count();
    CycleCoverIndex cover(g);

    for (int size = n; size >= 3; --size) {
        uint32_t found = 0;
        bool hit = false;
        for_each_mask_of_size(n, size, [&](uint32_t mask) {
            if (cover.feasible(mask)) {
                found = mask;
                hit = true;
                return false;
            }
            return true;
        });
        if (hit) {
            auto cycles = cover.decompose(found);
            return {size, OrientedCyclePacking::from_cycles(g, cycles)};
        }
    }
    return {0, OrientedCyclePacking::empty(g)};
}

int oracle_exact_f(const Graph& g, int budget) {
    check_budget(g, std::min(budget, 20), "oracle_exact_f");
    const int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    const uint32_t limit = uint32_t{1} << n;

    std::vector<int8_t> independent(limit, 0), min_deg(limit, 0);
    independent[0] = 1;
    int best = 0;
    bool have = false;
    for (uint32_t mask = 1; mask < limit; ++mask) {
        int v = std::countr_zero(mask);
        uint32_t rest = mask & ~bit(v);
        independent[mask] = independent[rest] && !(adj[v] & rest);
        min_deg[mask] = rest ? int8_t(std::min<int>(min_deg[rest], g.degree(v))) : int8_t(g.degree(v));
        if (independent[mask]) {
            int value = std::popcount(mask) - min_deg[mask] + 1;
            if (!have || value > best) {
                best = value;
                have = true;
            }
        }
    }
    return best;
}

}  // namespace p2f
