#pragma once

#include <utility>
#include <vector>

#include "p2f/graph.hpp"

namespace p2f {

/// Pseudo 2-factor of a forest: a matching plus the unmatched vertices
/// as singletons; component count always equals the independence number
/// of the forest.
struct ForestFactor {
    std::vector<std::pair<int, int>> matched_edges;
    VertexSet singletons;

    int component_count() const { return int(matched_edges.size()) + singletons.count(); }
};

// All operations require the subgraph induced by `within` to be acyclic
// and throw std::invalid_argument otherwise.

/// Exact independence number via per-component tree DP.
int forest_alpha(const Graph& g, const VertexSet& within);

/// A maximum independent set of the induced forest (deterministic).
VertexSet forest_max_independent_set(const Graph& g, const VertexSet& within);

/// A maximum independent set containing u. Requires u to have induced
/// degree <= 1 (such a set always exists then); ties in the DP at u are
/// broken toward including u.
VertexSet forest_max_independent_set_containing(const Graph& g, const VertexSet& within, int u);

/// Maximum matching via leaf peeling: repeatedly match the smallest
/// remaining leaf to its unique neighbor. Size equals |within| - alpha.
std::vector<std::pair<int, int>> forest_max_matching(const Graph& g, const VertexSet& within);

/// Maximum matching plus leftover singletons; exactly alpha components.
ForestFactor forest_pseudo_factor(const Graph& g, const VertexSet& within);

}  // namespace p2f
