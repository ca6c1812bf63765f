#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lietensor/geometry.hpp"
#include "lietensor/lie_algebra.hpp"
#include "lietensor/structures.hpp"

namespace lietensor {

/// Parsed input document.
///
///   {
///     "dimension": 4,
///     "parameters": ["a", "b"],
///     "brackets": [{"i": 1, "j": 4, "k": 1, "coef": "1"}, ...],
///     "metric": "identity" | [["1","0",...], ...],
///     "Q": "circulant-shift" | [[...], ...],
///     "domain": ["-1 <= b <= a <= 1", "a*b != 0"]
///   }
///
/// Brackets list only i < j; the antisymmetric completion is implicit.
/// Matrices are row-major: entry [l-1][j-1] is the e_l-component of the image of e_j.
struct AnalysisInput {
  int dimension = 0;
  std::vector<std::string> parameters;
  std::vector<BracketEntry> brackets;
  std::optional<Matrix> metric;  // identity when absent
  std::optional<Matrix> q;       // circulant shift when absent
  std::vector<std::string> domain;
  nlohmann::json echo;
};

/// Throws SchemaError on any structural problem, including unparsable expressions.
AnalysisInput parse_input(const nlohmann::json& doc);
AnalysisInput load_input(const std::string& path);

nlohmann::json family_document(Family f);
AnalysisInput family_input(Family f);

/// Names accepted by `constraint_set`, in report order.
const std::vector<std::string>& constraint_set_names();

struct PlaneCurvature {
  int i;
  int j;
  std::optional<ScalarExpr> value;  // empty for a degenerate plane
};

struct Analysis {
  AnalysisInput input;
  LieAlgebra algebra;
  bool antisymmetric;
  MetricTensor metric;
  Endomorphism q;
  StructureReport structure;
  Connection connection;
  Curvature04 curvature;
  RicciScalar ricci;
  std::vector<PlaneCurvature> sectional;  // basic planes (e_i, e_j), i < j
  std::optional<FTheta> f_theta;          // absent when P² ≠ id
  std::map<std::string, std::optional<ConstraintSet>> constraints;

  /// Throws Error for an unknown name or a set not defined for this input.
  const ConstraintSet& constraint_set(const std::string& name) const;
};

/// Runs the full pipeline. Throws LieAlgebraError (Jacobi, indices) or MetricError (singular, asymmetric).
Analysis analyze(const AnalysisInput& input);

/// Checks that `at` names only declared parameters and covers all of them; throws SchemaError otherwise.
void check_assignment(const ParameterAssignment& at, const std::vector<std::string>& params);

}  // namespace lietensor
