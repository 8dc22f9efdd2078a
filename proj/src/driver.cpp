#include "p2f/driver.hpp"

#include <algorithm>
#include <stdexcept>

#include "p2f/errors.hpp"
#include "p2f/forest.hpp"

namespace p2f {
namespace {

PseudoTwoFactor assemble(const Graph& g, const OrientedCyclePacking& packing, const ForestFactor& leftover) {
    PseudoTwoFactor factor;
    auto cycles = packing.cycles;
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    for (auto& c : cycles) factor.components.push_back({ComponentKind::Cycle, std::move(c)});
    for (auto [u, v] : leftover.matched_edges) factor.components.push_back({ComponentKind::Edge, {u, v}});
    leftover.singletons.for_each([&](int v) { factor.components.push_back({ComponentKind::Singleton, {v}}); });
    factor.non_cycle_count = int(leftover.matched_edges.size()) + leftover.singletons.count();
    (void)g;
    return factor;
}

}  // namespace

SolveReport solve(const Graph& g, const SolveConfig& config) {
    if (g.vertex_count() == 0) throw std::invalid_argument("solve: empty graph");

    SolveReport report;
    PackOutcome packed = pack_to_optimum(g, config.trace);
    report.stats = packed.stats;

    VertexSet leftover_set = VertexSet::full(g.vertex_count()).minus(packed.packing.covered);
    ForestFactor leftover = forest_pseudo_factor(g, leftover_set);
    report.factor = assemble(g, packed.packing, leftover);

    if (!leftover_set.empty()) {
        if (!packed.certificate) throw InternalError("solve: uncovered leftover without certificate");
        if (report.factor.non_cycle_count != forest_alpha(g, leftover_set))
            throw InternalError("solve: non-cycle count differs from leftover independence number");
    }

    BoundMode mode = config.mode;
    if (mode == BoundMode::ExactF) {
        try {
            report.bound_report = compute_deficiency(g, config.budget);
        } catch (const BudgetError&) {
            if (!config.allow_fallback) throw;
            mode = BoundMode::CertificateOnly;
            report.fell_back = true;
        }
    }

    report.mode_used = mode;
    if (mode == BoundMode::ExactF) {
        report.bound_value = report.bound_report->deficiency;
        report.satisfied = report.factor.non_cycle_count <= std::max(0, report.bound_value);
    } else {
        report.certificate = packed.certificate;
        report.bound_value = packed.certificate ? packed.certificate->value : 0;
        report.satisfied = report.factor.non_cycle_count <= std::max(0, report.bound_value);
    }
    return report;
}

ValidationResult validate(const Graph& g, const PseudoTwoFactor& factor) {
    ValidationResult result;
    auto complain = [&](std::string msg) { result.violations.push_back(std::move(msg)); };

    const int n = g.vertex_count();
    std::vector<int> seen(n, 0);
    int non_cycle = 0;
    for (size_t idx = 0; idx < factor.components.size(); ++idx) {
        const auto& comp = factor.components[idx];
        const auto& vs = comp.vertices;
        std::string tag = "component " + std::to_string(idx);
        bool in_range = true;
        for (int v : vs) {
            if (v < 0 || v >= n) {
                complain(tag + ": vertex out of range");
                in_range = false;
            } else {
                ++seen[v];
            }
        }
        if (!in_range) continue;
        switch (comp.kind) {
            case ComponentKind::Singleton:
                if (vs.size() != 1) complain(tag + ": singleton must have exactly one vertex");
                ++non_cycle;
                break;
            case ComponentKind::Edge:
                if (vs.size() != 2)
                    complain(tag + ": edge must have exactly two vertices");
                else if (!g.has_edge(vs[0], vs[1]))
                    complain(tag + ": edge not present in graph");
                ++non_cycle;
                break;
            case ComponentKind::Cycle: {
                if (vs.size() < 3) {
                    complain(tag + ": cycle shorter than 3");
                    break;
                }
                std::vector<int> sorted = vs;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    complain(tag + ": cycle repeats a vertex");
                for (size_t i = 0; i < vs.size(); ++i) {
                    int a = vs[i], b = vs[(i + 1) % vs.size()];
                    if (!g.has_edge(a, b)) {
                        complain(tag + ": consecutive pair (" + std::to_string(a) + "," + std::to_string(b) +
                                 ") not an edge");
                        break;
                    }
                }
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (seen[v] == 0) complain("vertex " + std::to_string(v) + " missing from factor");
        if (seen[v] > 1) complain("vertex " + std::to_string(v) + " appears in multiple components");
    }
    if (non_cycle != factor.non_cycle_count)
        complain("non_cycle_count is " + std::to_string(factor.non_cycle_count) + ", recomputes to " +
                 std::to_string(non_cycle));

    result.ok = result.violations.empty();
    return result;
}

TheoremChecks check_theorem_consequences(const Graph& g, SearchBudget budget) {
    TheoremChecks checks;
    DeficiencyReport bound = compute_deficiency(g, budget);
    SolveConfig config;
    config.mode = BoundMode::CertificateOnly;
    SolveReport solved = solve(g, config);

    checks.alpha = bound.alpha;
    checks.min_degree = bound.min_degree;
    checks.non_cycle_count = solved.factor.non_cycle_count;

    checks.classical_applicable = bound.alpha >= bound.min_degree;
    if (checks.classical_applicable)
        checks.classical_ok = checks.non_cycle_count <= bound.classical_bound;

    checks.high_degree_applicable = bound.min_degree >= bound.alpha + 1;
    if (checks.high_degree_applicable) checks.high_degree_ok = checks.non_cycle_count == 0;

    checks.condition_applicable = bound.deficiency <= 0;
    if (checks.condition_applicable) checks.condition_ok = checks.non_cycle_count == 0;

    checks.all_ok = checks.classical_ok && checks.high_degree_ok && checks.condition_ok;
    return checks;
}

}  // namespace p2f
