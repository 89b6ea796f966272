#pragma once

#include "wsys/polynomial.hpp"
#include "wsys/relations.hpp"

#include <nlohmann/json.hpp>

namespace wsys {

/// {"monomial": ["p/q", ...], "binomial": [...], "latex": "..."}
nlohmann::json poly_to_json(const PolynomialQ& p);
PolynomialQ poly_from_json(const nlohmann::json& j);

/// List of {check, family, N, status, residual}.
nlohmann::json report_to_json(const std::vector<CheckEntry>& report);

}  // namespace wsys
