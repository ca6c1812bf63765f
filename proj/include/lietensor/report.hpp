#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "lietensor/analysis.hpp"
#include "lietensor/constraints.hpp"

namespace lietensor {

/// Sparse tensors serialize as [{"indices": [...], "value": "..."}]; all
/// expressions are canonical strings that re-parse with parse_rational_function.
nlohmann::json analysis_report(const Analysis& analysis, const std::optional<ParameterAssignment>& at = std::nullopt);

nlohmann::json constraint_json(const ConstraintSet& cs);
nlohmann::json assignment_json(const ParameterAssignment& at);
nlohmann::json verdict_json(const ConstraintSet& cs, const Verdict& v);

/// Grid built from `grid_text` plus the input's domain strings as filters.
GridSpec grid_with_domain(const std::string& grid_text, const AnalysisInput& input);

nlohmann::json sweep_report(const Analysis& analysis, const std::string& set_name, const std::string& grid_text);

/// Full R-invariance set of R against the reduced list, at every grid point (no filters).
/// Requires dimension 4 and Q the circulant shift.
EquivalenceReport oracle_equivalence(const Curvature04& R, const Endomorphism& q, const GridSpec& grid);
nlohmann::json oracle_report(const Analysis& analysis, const std::string& grid_text);

/// Pretty-printed with a trailing newline; byte-stable for equal inputs.
std::string render(const nlohmann::json& doc);

}  // namespace lietensor
