#pragma once

#include <string>

#include "json.hpp"
#include "p2f/deficiency.hpp"
#include "p2f/driver.hpp"

namespace p2f {

/// {"f": .., "alpha": .., "delta": .., "classical_bound": .., "witness": [..]}
nlohmann::json to_json(const DeficiencyReport& report);

/// {"components": [{"kind": "cycle"|"edge"|"vertex", "vertices": [..]}, ..],
///  "non_cycle_count": k, "mode": "exact-f"|"certificate", "bound": b,
///  "witness": [..], "satisfied": bool}  (+ "fallback": true when it happened)
nlohmann::json to_json(const SolveReport& report);

nlohmann::json to_json(const PseudoTwoFactor& factor);
PseudoTwoFactor factor_from_json(const nlohmann::json& j);  // throws InputError

}  // namespace p2f
