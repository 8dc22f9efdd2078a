#pragma once

#include "p2f/graph.hpp"

namespace p2f {

/// Independent set I together with its deficiency value |I| - d(I) + 1,
/// where d(I) is the minimum whole-graph degree over I. Any valid
/// certificate lower-bounds the graph's deficiency.
struct DeficiencyCertificate {
    VertexSet witness;
    int value = 0;
};

/// Exact deficiency of a graph plus comparison quantities.
struct DeficiencyReport {
    int deficiency = 0;      // max over nonempty independent sets of |I| - d(I) + 1
    int alpha = 0;           // independence number
    int min_degree = 0;
    int classical_bound = 0; // alpha - min_degree + 1; deficiency never exceeds it
    DeficiencyCertificate certificate;  // witness attaining `deficiency`
};

struct SearchBudget {
    int exact_max_n = 40;  // branch-and-bound limit; hard implementation cap is 64
};

/// Exact deficiency with witness. Throws BudgetError when the graph
/// exceeds the budget; throws std::invalid_argument on an empty graph.
DeficiencyReport compute_deficiency(const Graph& g, SearchBudget budget = {});

/// alpha(g) - delta(g) + 1 with alpha exact.
int classical_bound(const Graph& g, SearchBudget budget = {});

/// |witness| - d(witness) + 1 for a nonempty vertex set.
int certificate_value(const Graph& g, const VertexSet& witness);

/// True iff the witness is nonempty, independent, and its value
/// recomputes exactly. Never throws.
bool verify_certificate(const Graph& g, const DeficiencyCertificate& c);

/// True iff every nonempty independent set I satisfies d(I) >= |I| + 1,
/// i.e. the deficiency is <= 0.
bool satisfies_two_factor_condition(const Graph& g, SearchBudget budget = {});

}  // namespace p2f
