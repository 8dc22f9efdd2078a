#include "p2f/deficiency.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "p2f/errors.hpp"

namespace p2f {
namespace {

constexpr int kMaskCap = 64;

uint64_t bit(int v) { return uint64_t{1} << v; }

// Exact maximum independent set over <= 64 vertices, branch and bound
// with a greedy clique-cover upper bound. Deterministic: the pivot is
// the smallest vertex of maximum degree inside the candidate set, and
// the include branch is explored first.
struct MisSolver {
    int n;
    std::vector<uint64_t> adj;

    uint64_t best_set = 0;
    int best = -1;

    explicit MisSolver(const Graph& g) : n(g.vertex_count()), adj(n, 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) adj[v] |= bit(u);
    }

    int cover_bound(uint64_t cand) const {
        int cliques = 0;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= ~bit(v);
            uint64_t common = adj[v] & cand;
            while (common) {
                int u = std::countr_zero(common);
                cand &= ~bit(u);
                common &= adj[u] & cand;
            }
            ++cliques;
        }
        return cliques;
    }

    void expand(uint64_t cur, int cur_size, uint64_t cand) {
        if (cur_size > best) {
            best = cur_size;
            best_set = cur;
        }
        if (!cand) return;
        if (cur_size + cover_bound(cand) <= best) return;

        int pivot = -1, pivot_deg = -1;
        for (uint64_t rest = cand; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(adj[v] & cand);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        expand(cur | bit(pivot), cur_size + 1, cand & ~(adj[pivot] | bit(pivot)));
        expand(cur, cur_size, cand & ~bit(pivot));
    }

    // Largest independent subset of `allowed`; returns the set.
    uint64_t solve(uint64_t allowed) {
        best = -1;
        best_set = 0;
        expand(0, 0, allowed);
        return best_set;
    }
};

VertexSet to_vertex_set(int n, uint64_t mask) {
    VertexSet s(n);
    while (mask) {
        s.set(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

void check_budget(const Graph& g, SearchBudget budget, const char* who) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument(std::string(who) + ": empty graph");
    if (n > budget.exact_max_n || n > kMaskCap)
        throw BudgetError(std::string(who) + ": n=" + std::to_string(n) + " exceeds exact-search budget " +
                          std::to_string(std::min(budget.exact_max_n, kMaskCap)));
}

}  // namespace

int certificate_value(const Graph& g, const VertexSet& witness) {
    return witness.count() - min_degree_of_set(g, witness) + 1;
}

bool verify_certificate(const Graph& g, const DeficiencyCertificate& c) {
    if (c.witness.empty()) return false;
    if (c.witness.universe() != g.vertex_count()) return false;
    bool in_range = true;
    c.witness.for_each([&](int v) {
        if (v >= g.vertex_count()) in_range = false;
    });
    if (!in_range) return false;
    if (!is_independent(g, c.witness)) return false;
    return certificate_value(g, c.witness) == c.value;
}

DeficiencyReport compute_deficiency(const Graph& g, SearchBudget budget) {
    check_budget(g, budget, "compute_deficiency");
    const int n = g.vertex_count();
    MisSolver solver(g);

    // The maximizing set has some member of minimum degree inside it, so
    // anchoring on that member and restricting to vertices of no smaller
    // degree loses nothing: for anchor v the value is exactly
    // (1 + mis(restricted \ N[v])) - deg(v) + 1.
    int best_value = 0;
    bool have = false;
    VertexSet best_witness;
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    for (int v = 0; v < n; ++v) {
        uint64_t universe = 0;
        for (int u = 0; u < n; ++u)
            if (deg[u] >= deg[v]) universe |= bit(u);
        uint64_t cand = universe & ~(solver.adj[v] | bit(v));
        uint64_t rest = solver.solve(cand);
        VertexSet witness = to_vertex_set(n, rest | bit(v));
        int value = witness.count() - deg[v] + 1;
        if (!have || value > best_value ||
            (value == best_value && witness.to_vector() < best_witness.to_vector())) {
            have = true;
            best_value = value;
            best_witness = witness;
        }
    }

    DeficiencyReport report;
    report.deficiency = best_value;
    report.alpha = std::popcount(solver.solve(n == 64 ? ~uint64_t{0} : bit(n) - 1));
    report.min_degree = *std::min_element(deg.begin(), deg.end());
    report.classical_bound = report.alpha - report.min_degree + 1;
    report.certificate = {best_witness, certificate_value(g, best_witness)};

    if (report.certificate.value != report.deficiency)
        throw InternalError("compute_deficiency: witness value mismatch");
    if (report.deficiency > report.classical_bound)
        throw InternalError("compute_deficiency: deficiency exceeds classical bound");
    if (!verify_certificate(g, report.certificate))
        throw InternalError("compute_deficiency: witness failed verification");
    return report;
}

int classical_bound(const Graph& g, SearchBudget budget) {
    return compute_deficiency(g, budget).classical_bound;
}

bool satisfies_two_factor_condition(const Graph& g, SearchBudget budget) {
    return compute_deficiency(g, budget).deficiency <= 0;
}

}  // namespace p2f
