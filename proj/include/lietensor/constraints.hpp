#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lietensor/parse.hpp"
#include "lietensor/scalar.hpp"

namespace lietensor {

/// Polynomials whose common vanishing encodes a property.
///
/// Every polynomial is primitive over the integers with a positive leading
/// coefficient, there are no duplicates or zeros, and the list is sorted by
/// canonical_less. `assumptions` are cleared denominators, which the property
/// presupposes to be nonzero.
struct ConstraintSet {
  std::vector<Polynomial> polys;
  std::vector<Polynomial> assumptions;

  bool empty() const { return polys.empty(); }
  std::set<std::string> variables() const;
  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

/// Integer primitive form with positive leading coefficient; zero stays zero.
Polynomial canonical_form(const Polynomial& p);

ConstraintSet canonicalize(std::span<const ScalarExpr> residuals);
ConstraintSet canonicalize(std::span<const Polynomial> residuals);

struct Verdict {
  struct Residual {
    std::size_t index;  // into ConstraintSet::polys
    Rational value;
  };

  bool satisfied = true;
  std::vector<Residual> residuals;            // nonzero values only
  std::vector<std::size_t> violated_assumptions;  // assumptions vanishing at the point
};

/// Exact evaluation; throws EvaluationError if the point misses a parameter.
Verdict evaluate(const ConstraintSet& cs, const ParameterAssignment& at);

struct GridAxis {
  std::string name;
  Rational start;
  Rational end;
  Rational step;
};

struct GridSpec {
  std::vector<GridAxis> axes;  // sorted by name
  std::vector<Condition> filters;

  std::vector<std::string> names() const;
  /// Every grid point, lexicographic in the axis values; filters not applied.
  std::vector<ParameterAssignment> points() const;
  bool accepts(const ParameterAssignment& at) const;
};

/// "name=start:end:step" joined by ';', values as rational literals.
/// Throws GridError on malformed input, start > end, non-positive step or repeated names.
GridSpec parse_grid(std::string_view text);

/// Grid points passing the filters at which every polynomial vanishes.
std::vector<ParameterAssignment> sweep(const ConstraintSet& cs, const GridSpec& grid);

struct EquivalenceReport {
  bool equivalent = true;
  std::size_t points_checked = 0;
  std::optional<ParameterAssignment> counterexample;
  bool first_satisfied = false;  // at the counterexample
  bool second_satisfied = false;
};

EquivalenceReport equivalent_at(const ConstraintSet& a, const ConstraintSet& b,
                                std::span<const ParameterAssignment> points);
/// Compares satisfaction at every grid point passing the filters.
EquivalenceReport equivalent_on_grid(const ConstraintSet& a, const ConstraintSet& b, const GridSpec& grid);

}  // namespace lietensor
