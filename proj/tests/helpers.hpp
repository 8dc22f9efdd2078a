#pragma once

// Shared brute-force oracles for tests. These deliberately use the
// dumbest possible formulations (subset scans, edge-subset scans) so
// they stay independent of the library's search strategies.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "p2f/graph.hpp"

namespace testing_oracles {

inline std::vector<uint32_t> adj_masks(const p2f::Graph& g) {
    std::vector<uint32_t> adj(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) adj[v] |= uint32_t{1} << u;
    return adj;
}

inline bool mask_independent(const std::vector<uint32_t>& adj, uint32_t mask) {
    for (uint32_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj[v] & mask) return false;
    }
    return true;
}

// Independence number of the subgraph induced by `within` by scanning
// all subsets (n <= ~20).
inline int brute_alpha(const p2f::Graph& g, const p2f::VertexSet& within) {
    auto adj = adj_masks(g);
    uint32_t universe = 0;
    within.for_each([&](int v) { universe |= uint32_t{1} << v; });
    int best = 0;
    for (uint32_t mask = universe;; mask = (mask - 1) & universe) {
        if (mask_independent(adj, mask)) best = std::max(best, std::popcount(mask));
        if (mask == 0) break;
    }
    return best;
}

inline int brute_alpha(const p2f::Graph& g) {
    return brute_alpha(g, p2f::VertexSet::full(g.vertex_count()));
}

// max |I| - d(I) + 1 over nonempty independent sets by full subset scan.
inline int brute_deficiency(const p2f::Graph& g) {
    auto adj = adj_masks(g);
    const uint32_t limit = uint32_t{1} << g.vertex_count();
    int best = 0;
    bool have = false;
    for (uint32_t mask = 1; mask < limit; ++mask) {
        if (!mask_independent(adj, mask)) continue;
        int min_deg = g.vertex_count();
        for (uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            min_deg = std::min(min_deg, g.degree(v));
        }
        int value = std::popcount(mask) - min_deg + 1;
        if (!have || value > best) {
            best = value;
            have = true;
        }
    }
    return best;
}

// Maximum matching of the subgraph induced by `within` by recursion.
inline int brute_matching(const p2f::Graph& g, uint32_t mask, const std::vector<uint32_t>& adj) {
    if (!mask) return 0;
    int v = std::countr_zero(mask);
    uint32_t rest = mask & ~(uint32_t{1} << v);
    int best = brute_matching(g, rest, adj);
    for (uint32_t mates = adj[v] & rest; mates;) {
        int u = std::countr_zero(mates);
        mates &= mates - 1;
        best = std::max(best, 1 + brute_matching(g, rest & ~(uint32_t{1} << u), adj));
    }
    return best;
}

inline int brute_matching(const p2f::Graph& g, const p2f::VertexSet& within) {
    auto adj = adj_masks(g);
    uint32_t mask = 0;
    within.for_each([&](int v) { mask |= uint32_t{1} << v; });
    return brute_matching(g, mask, adj);
}

// Scans every edge subset; a subset is a disjoint cycle family iff all
// its vertex degrees are 0 or 2. Tracks, per cycle-covered popcount,
// whether it is attainable. Usable up to ~18 edges.
inline std::vector<bool> brute_cycle_coverable_sizes(const p2f::Graph& g) {
    auto edges = g.edges();
    const int m = int(edges.size());
    std::vector<bool> attainable(g.vertex_count() + 1, false);
    attainable[0] = true;
    for (uint32_t pick = 1; pick < (uint32_t{1} << m); ++pick) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e = 0; e < m; ++e) {
            if (pick & (uint32_t{1} << e)) {
                ++deg[edges[e].first];
                ++deg[edges[e].second];
            }
        }
        bool ok = true;
        int covered = 0;
        for (int v = 0; v < g.vertex_count() && ok; ++v) {
            if (deg[v] == 2) ++covered;
            else if (deg[v] != 0) ok = false;
        }
        if (ok) attainable[covered] = true;
    }
    return attainable;
}

// Exact minimum non-cycle count by combining cycle-coverable subsets
// with brute matchings on the complement. Scans vertex subsets, so only
// for tiny graphs (n <= ~10, m <= 18).
inline int brute_min_non_cycle(const p2f::Graph& g) {
    auto edges = g.edges();
    const int m = int(edges.size());
    const int n = g.vertex_count();
    auto adj = adj_masks(g);
    std::vector<char> coverable(size_t{1} << n, 0);
    coverable[0] = 1;
    for (uint32_t pick = 1; pick < (uint32_t{1} << m); ++pick) {
        std::vector<int> deg(n, 0);
        uint32_t covered = 0;
        for (int e = 0; e < m; ++e) {
            if (pick & (uint32_t{1} << e)) {
                ++deg[edges[e].first];
                ++deg[edges[e].second];
                covered |= (uint32_t{1} << edges[e].first) | (uint32_t{1} << edges[e].second);
            }
        }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (deg[v] != 0 && deg[v] != 2) ok = false;
        if (ok) coverable[covered] = 1;
    }
    int best = n + 1;
    const uint32_t full = (uint32_t{1} << n) - 1;
    for (uint32_t s = 0; s <= full; ++s) {
        if (!coverable[s]) continue;
        uint32_t t = full & ~s;
        best = std::min(best, std::popcount(t) - brute_matching(g, t, adj));
    }
    return best;
}

inline int brute_max_two_regular(const p2f::Graph& g) {
    auto sizes = brute_cycle_coverable_sizes(g);
    for (int k = g.vertex_count(); k >= 0; --k)
        if (sizes[k]) return k;
    return 0;
}

}  // namespace testing_oracles
