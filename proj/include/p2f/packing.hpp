#pragma once

#include <set>
#include <utility>
#include <vector>

#include "p2f/graph.hpp"

namespace p2f {

/// Union of pairwise vertex-disjoint oriented cycles of a graph (a
/// 2-regular subgraph). Every mutation rebuilds or extends the
/// successor/predecessor maps and is audited.
struct OrientedCyclePacking {
    std::vector<std::vector<int>> cycles;  // each of length >= 3, in orientation order
    std::vector<int> successor;            // -1 for uncovered vertices
    std::vector<int> predecessor;
    VertexSet covered;

    static OrientedCyclePacking empty(const Graph& g);

    /// Build from explicit oriented cycles (used by tests and greedy
    /// extraction); audits against g.
    static OrientedCyclePacking from_cycles(const Graph& g, std::vector<std::vector<int>> cycles);

    /// Decompose a 2-regular edge set into cycles. Each cycle starts at
    /// its smallest vertex and is oriented toward that vertex's smaller
    /// neighbor. Throws InternalError if any incident vertex does not
    /// have degree exactly 2.
    static OrientedCyclePacking from_edge_set(const Graph& g, const std::set<std::pair<int, int>>& edges);

    int covered_count() const { return covered.count(); }
    /// All packing edges, normalized u < v.
    std::set<std::pair<int, int>> edge_set() const;

    /// Appends one new vertex-disjoint cycle in the given orientation.
    void append_cycle(const Graph& g, const std::vector<int>& cycle);

    /// Full consistency check: disjoint cycles of length >= 3, all edges
    /// present in g, successor/predecessor mutually inverse and matching
    /// the cycle sequences. Throws InternalError on violation.
    void audit(const Graph& g) const;
};

}  // namespace p2f
