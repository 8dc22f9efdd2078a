#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p2f/deficiency.hpp"
#include "p2f/graph.hpp"
#include "p2f/packer.hpp"
#include "p2f/packing.hpp"

namespace p2f {

enum class ComponentKind { Singleton, Edge, Cycle };

struct FactorComponent {
    ComponentKind kind;
    std::vector<int> vertices;  // cycle components keep their orientation order
};

/// Spanning subgraph whose components are single vertices, single
/// edges, or cycles.
struct PseudoTwoFactor {
    std::vector<FactorComponent> components;
    int non_cycle_count = 0;  // number of Singleton + Edge components
};

struct ValidationResult {
    bool ok = false;
    std::vector<std::string> violations;
};

enum class BoundMode { ExactF, CertificateOnly };

struct SolveConfig {
    BoundMode mode = BoundMode::ExactF;
    SearchBudget budget{};
    bool allow_fallback = false;  // fall back to certificate mode when the exact budget is exceeded
    const TraceSink* trace = nullptr;
};

struct SolveReport {
    PseudoTwoFactor factor;
    BoundMode mode_used = BoundMode::ExactF;
    bool fell_back = false;
    std::optional<DeficiencyReport> bound_report;          // present in exact mode
    std::optional<DeficiencyCertificate> certificate;      // present in certificate mode unless the factor is a 2-factor
    int bound_value = 0;  // deficiency in exact mode, certificate value otherwise (0 for a 2-factor)
    bool satisfied = false;
    PackStats stats;
};

/// End-to-end solve: pack cycles to a local optimum, factor the leftover
/// forest into a matching plus singletons, and check the non-cycle count
/// against either the exact deficiency or the extracted certificate.
SolveReport solve(const Graph& g, const SolveConfig& config = {});

/// Structural check of a pseudo 2-factor against a graph; collects every
/// violation instead of stopping at the first.
ValidationResult validate(const Graph& g, const PseudoTwoFactor& factor);

/// Classical consequences checked on a solved instance: the
/// alpha-delta+1 bound when alpha >= delta, and the 2-factor guarantees
/// when delta >= alpha+1 or when every independent set I has
/// d(I) >= |I|+1.
struct TheoremChecks {
    int alpha = 0;
    int min_degree = 0;
    int non_cycle_count = 0;
    bool classical_applicable = false;
    bool classical_ok = true;
    bool high_degree_applicable = false;
    bool high_degree_ok = true;
    bool condition_applicable = false;
    bool condition_ok = true;
    bool all_ok = true;
};
TheoremChecks check_theorem_consequences(const Graph& g, SearchBudget budget = {});

}  // namespace p2f
