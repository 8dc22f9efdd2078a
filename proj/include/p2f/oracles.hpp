#pragma once

#include <utility>

#include "p2f/driver.hpp"
#include "p2f/graph.hpp"
#include "p2f/packing.hpp"

namespace p2f {

// Exponential-time exact oracles for ground truth on small instances.
// Each takes an explicit vertex budget and throws BudgetError beyond it;
// the implementation caps at 24 vertices (flat bitmask tables).

/// Exact minimum number of non-cycle components over all pseudo
/// 2-factors, with a witness. Uses the identity: with the cycle-covered
/// set S fixed, the best completion is a maximum matching on G - S, so
/// the count is |T| - nu(G[T]) over complements T of cycle-coverable
/// sets, enumerated by ascending count.
std::pair<int, PseudoTwoFactor> oracle_min_non_cycle(const Graph& g, int budget = 16);

/// Maximum number of vertices coverable by pairwise vertex-disjoint
/// cycles, with a witness packing.
std::pair<int, OrientedCyclePacking> oracle_max_two_regular(const Graph& g, int budget = 24);

/// Naive exact deficiency: scans every subset, keeps independent ones.
/// Cross-checks compute_deficiency.
int oracle_exact_f(const Graph& g, int budget = 20);

}  // namespace p2f
