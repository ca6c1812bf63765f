#pragma once

// Expression grammar (whitespace ignored):
//
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := base ('^' nonneg-integer)?
//   base    := rational-literal | identifier | '(' expr ')' | '-' base
//   rational-literal := integer ('/' positive-integer)?
//   identifier := letter (letter | digit | '_')*

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lietensor/scalar.hpp"

namespace lietensor {

/// Parses a polynomial expression; every identifier must be in `params`.
/// Throws ParseError carrying the offending position.
ScalarExpr parse_scalar(std::string_view text, std::span<const std::string> params);

/// As parse_scalar, but additionally accepts one top-level quotient "expr / base",
/// which is how proper rational functions are printed.
ScalarExpr parse_rational_function(std::string_view text, std::span<const std::string> params);

enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };

/// Chained polynomial comparison such as "-1 <= b <= a <= 1" or "a*b != 0".
class Condition {
 public:
  Condition(std::string text, std::vector<Polynomial> operands, std::vector<Relation> relations);

  const std::string& text() const { return text_; }
  std::set<std::string> variables() const;
  /// Exact; throws EvaluationError when a parameter is missing.
  bool holds(const ParameterAssignment& at) const;

 private:
  std::string text_;
  std::vector<Polynomial> operands_;
  std::vector<Relation> relations_;
};

/// Relations: "<", "<=", ">", ">=", "=", "==", "!=".
Condition parse_condition(std::string_view text, std::span<const std::string> params);

/// "a=1,b=-1/2". Names must be identifiers; duplicates are rejected.
ParameterAssignment parse_assignment(std::string_view text);

}  // namespace lietensor
