#pragma once

#include <string>

#include <json.hpp>

#include "hh/bounds.hpp"
#include "hh/functions.hpp"
#include "hh/geometry.hpp"
#include "hh/quadrature.hpp"
#include "hh/rng.hpp"

namespace hh {

/// {"n": int, "vertices": [[f64,...], ...]}
nlohmann::ordered_json simplex_to_json(const Simplex& S);
Simplex simplex_from_json(const nlohmann::json& j);

const char* family_name(BoundFamily family);
BoundFamily family_from_string(const std::string& name);
const char* status_name(BoundStatus status);
const char* kind_name(EstimateKind kind);
const char* class_name(ConvexClass c);

/// {"value": f64, "kind": str, "std_error": f64, "n_samples": int}
nlohmann::ordered_json estimate_to_json(const IntegralEstimate& est);

/// {"family", "lower", "middle": {value, kind, std_error}, "upper",
///  "margin_lower", "margin_upper", "status", "guard"}; the strong families
/// additionally carry "classical_lower"/"classical_upper".
nlohmann::ordered_json report_to_json(const BoundReport& r);

/// Builds a FunctionSpec from a descriptor {"class": str, "params": {...}}
/// for dimension dim. Omitted vector/matrix parameters are drawn from gen
/// when one is supplied (campaign mode); otherwise they are required.
FunctionSpec function_from_json(const nlohmann::json& descriptor, int dim, Rng* gen = nullptr);

} // namespace hh
