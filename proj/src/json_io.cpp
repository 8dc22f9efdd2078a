#include "p2f/json_io.hpp"

#include "p2f/errors.hpp"

namespace p2f {
namespace {

const char* kind_name(ComponentKind kind) {
    switch (kind) {
        case ComponentKind::Cycle: return "cycle";
        case ComponentKind::Edge: return "edge";
        case ComponentKind::Singleton: return "vertex";
    }
    return "?";
}

ComponentKind kind_from_name(const std::string& name) {
    if (name == "cycle") return ComponentKind::Cycle;
    if (name == "edge") return ComponentKind::Edge;
    if (name == "vertex") return ComponentKind::Singleton;
    throw InputError("factor json: unknown component kind '" + name + "'");
}

}  // namespace

nlohmann::json to_json(const DeficiencyReport& report) {
    return {
        {"f", report.deficiency},
        {"alpha", report.alpha},
        {"delta", report.min_degree},
        {"classical_bound", report.classical_bound},
        {"witness", report.certificate.witness.to_vector()},
    };
}

nlohmann::json to_json(const PseudoTwoFactor& factor) {
    nlohmann::json components = nlohmann::json::array();
    for (const auto& comp : factor.components)
        components.push_back({{"kind", kind_name(comp.kind)}, {"vertices", comp.vertices}});
    return {{"components", components}, {"non_cycle_count", factor.non_cycle_count}};
}

nlohmann::json to_json(const SolveReport& report) {
    nlohmann::json j = to_json(report.factor);
    j["mode"] = report.mode_used == BoundMode::ExactF ? "exact-f" : "certificate";
    j["bound"] = report.bound_value;
    std::vector<int> witness;
    if (report.bound_report)
        witness = report.bound_report->certificate.witness.to_vector();
    else if (report.certificate)
        witness = report.certificate->witness.to_vector();
    j["witness"] = witness;
    j["satisfied"] = report.satisfied;
    if (report.fell_back) j["fallback"] = true;
    return j;
}

PseudoTwoFactor factor_from_json(const nlohmann::json& j) {
    try {
        PseudoTwoFactor factor;
        for (const auto& comp : j.at("components")) {
            FactorComponent fc;
            fc.kind = kind_from_name(comp.at("kind").get<std::string>());
            fc.vertices = comp.at("vertices").get<std::vector<int>>();
            factor.components.push_back(std::move(fc));
        }
        factor.non_cycle_count = j.at("non_cycle_count").get<int>();
        return factor;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("factor json: ") + e.what());
    }
}

}  // namespace p2f
