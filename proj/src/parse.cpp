#include "lietensor/parse.hpp"

#include <algorithm>
#include <cctype>

#include "lietensor/error.hpp"

namespace lietensor {
namespace {

constexpr unsigned kMaxExponent = 4096;

bool is_letter(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }
bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> params) : text_(text), params_(params) {}

  Polynomial expr() {
    Polynomial value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  Polynomial base() {
    const char ch = peek();
    if (ch == '-') {
      ++pos_;
      return -base();
    }
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_digit(ch)) return Polynomial(literal());
    if (is_letter(ch)) return identifier();
    if (ch == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + ch + "'");
  }

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(ParseError::Kind::Syntax, pos_, what); }

 private:
  Polynomial term() {
    Polynomial value = factor();
    while (accept('*')) value *= factor();
    return value;
  }

  Polynomial factor() {
    Polynomial value = base();
    if (accept('^')) {
      if (!is_digit(peek())) fail("expected non-negative integer exponent");
      const Integer e = integer();
      if (e > kMaxExponent) fail("exponent too large");
      value = pow(value, static_cast<unsigned>(e.get_ui()));
    }
    return value;
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational literal() {
    const Integer num = integer();
    // A '/' directly after an integer belongs to the literal; anything else is an error later.
    const std::size_t save = pos_;
    if (accept('/')) {
      if (!is_digit(peek())) {
        pos_ = save;
        return Rational(num);
      }
      const std::size_t den_pos = pos_;
      const Integer den = integer();
      if (den == 0) throw ParseError(ParseError::Kind::ZeroDenominator, den_pos, "zero denominator in literal");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Polynomial identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_letter(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (std::find(params_.begin(), params_.end(), name) == params_.end())
      throw ParseError(ParseError::Kind::UnknownIdentifier, start, "unknown identifier '" + name + "'");
    return Polynomial::variable(name);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::span<const std::string> params_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr parse_scalar(std::string_view text, std::span<const std::string> params) {
  Parser p(text, params);
  Polynomial value = p.expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return ScalarExpr(std::move(value));
}

ScalarExpr parse_rational_function(std::string_view text, std::span<const std::string> params) {
  Parser p(text, params);
  Polynomial num = p.expr();
  if (p.accept('/')) {
    const std::size_t den_pos = p.position();
    Polynomial den = p.base();
    if (!p.at_end()) p.fail("unexpected trailing input");
    if (den.is_zero()) throw ParseError(ParseError::Kind::ZeroDenominator, den_pos, "zero denominator");
    return ScalarExpr(std::move(num), std::move(den));
  }
  if (!p.at_end()) p.fail("unexpected trailing input");
  return ScalarExpr(std::move(num));
}

Condition::Condition(std::string text, std::vector<Polynomial> operands, std::vector<Relation> relations)
    : text_(std::move(text)), operands_(std::move(operands)), relations_(std::move(relations)) {}

std::set<std::string> Condition::variables() const {
  std::set<std::string> out;
  for (const auto& p : operands_) out.merge(p.variables());
  return out;
}

bool Condition::holds(const ParameterAssignment& at) const {
  std::vector<Rational> values;
  values.reserve(operands_.size());
  for (const auto& p : operands_) values.push_back(p.evaluate(at));
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto c = values[i] <=> values[i + 1];
    bool ok = false;
    switch (relations_[i]) {
      case Relation::Less: ok = c < 0; break;
      case Relation::LessEqual: ok = c <= 0; break;
      case Relation::Greater: ok = c > 0; break;
      case Relation::GreaterEqual: ok = c >= 0; break;
      case Relation::Equal: ok = c == 0; break;
      case Relation::NotEqual: ok = c != 0; break;
    }
    if (!ok) return false;
  }
  return true;
}

Condition parse_condition(std::string_view text, std::span<const std::string> params) {
  Parser p(text, params);
  std::vector<Polynomial> operands{p.expr()};
  std::vector<Relation> relations;
  while (!p.at_end()) {
    Relation r;
    if (p.accept("<=")) r = Relation::LessEqual;
    else if (p.accept(">=")) r = Relation::GreaterEqual;
    else if (p.accept("!=")) r = Relation::NotEqual;
    else if (p.accept("==")) r = Relation::Equal;
    else if (p.accept('<')) r = Relation::Less;
    else if (p.accept('>')) r = Relation::Greater;
    else if (p.accept('=')) r = Relation::Equal;
    else p.fail("expected a relation");
    relations.push_back(r);
    operands.push_back(p.expr());
  }
  if (relations.empty()) p.fail("condition has no relation");
  return Condition(std::string(text), std::move(operands), std::move(relations));
}

ParameterAssignment parse_assignment(std::string_view text) {
  ParameterAssignment out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, comma - start);
    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    };
    item = trim(item);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw Error("malformed assignment item '" + std::string(item) + "'");
    const std::string name(trim(item.substr(0, eq)));
    if (name.empty() || !is_letter(name.front()) ||
        !std::all_of(name.begin(), name.end(), [](char ch) { return is_letter(ch) || is_digit(ch) || ch == '_'; }))
      throw Error("malformed parameter name '" + name + "'");
    const Rational value = Rational::parse(trim(item.substr(eq + 1)));
    if (!out.values.emplace(name, value).second) throw Error("parameter '" + name + "' assigned twice");
    start = comma + 1;
  }
  return out;
}

}  // namespace lietensor
