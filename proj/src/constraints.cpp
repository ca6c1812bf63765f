#include "lietensor/constraints.hpp"

#include <algorithm>
#include <cctype>

#include "lietensor/error.hpp"

namespace lietensor {

std::set<std::string> ConstraintSet::variables() const {
  std::set<std::string> out;
  for (const auto& p : polys) out.merge(p.variables());
  for (const auto& p : assumptions) out.merge(p.variables());
  return out;
}

Polynomial canonical_form(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational scale = p.content();
  if (p.leading_coefficient().sign() < 0) scale = -scale;
  return p.scaled(scale.reciprocal());
}

namespace {

void sort_unique(std::vector<Polynomial>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ConstraintSet canonicalize(std::span<const ScalarExpr> residuals) {
  ConstraintSet out;
  for (const auto& r : residuals) {
    if (r.is_zero()) continue;
    out.polys.push_back(canonical_form(r.numerator()));
    if (!r.denominator().is_constant()) out.assumptions.push_back(canonical_form(r.denominator()));
  }
  sort_unique(out.polys);
  sort_unique(out.assumptions);
  return out;
}

ConstraintSet canonicalize(std::span<const Polynomial> residuals) {
  ConstraintSet out;
  for (const auto& r : residuals)
    if (!r.is_zero()) out.polys.push_back(canonical_form(r));
  sort_unique(out.polys);
  return out;
}

Verdict evaluate(const ConstraintSet& cs, const ParameterAssignment& at) {
  Verdict v;
  for (std::size_t i = 0; i < cs.polys.size(); ++i) {
    Rational value = cs.polys[i].evaluate(at);
    if (!value.is_zero()) {
      v.satisfied = false;
      v.residuals.push_back({i, std::move(value)});
    }
  }
  for (std::size_t i = 0; i < cs.assumptions.size(); ++i)
    if (cs.assumptions[i].evaluate(at).is_zero()) v.violated_assumptions.push_back(i);
  return v;
}

std::vector<std::string> GridSpec::names() const {
  std::vector<std::string> out;
  for (const auto& a : axes) out.push_back(a.name);
  return out;
}

std::vector<ParameterAssignment> GridSpec::points() const {
  std::vector<ParameterAssignment> out;
  if (axes.empty()) return out;
  std::vector<std::vector<Rational>> values;
  for (const auto& axis : axes) {
    std::vector<Rational> column;
    for (Rational x = axis.start; x <= axis.end; x += axis.step) column.push_back(x);
    values.push_back(std::move(column));
  }
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    ParameterAssignment p;
    for (std::size_t k = 0; k < axes.size(); ++k) p.values.emplace(axes[k].name, values[k][idx[k]]);
    out.push_back(std::move(p));
    std::size_t k = axes.size();
    for (;;) {
      if (k == 0) return out;
      --k;
      if (++idx[k] < values[k].size()) break;
      idx[k] = 0;
    }
  }
}

bool GridSpec::accepts(const ParameterAssignment& at) const {
  return std::all_of(filters.begin(), filters.end(), [&](const Condition& c) { return c.holds(at); });
}

GridSpec parse_grid(std::string_view text) {
  GridSpec grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t semi = std::min(text.find(';', start), text.size());
    const std::string item(text.substr(start, semi - start));
    start = semi + 1;
    const auto eq = item.find('=');
    const auto c1 = item.find(':', eq == std::string::npos ? 0 : eq);
    const auto c2 = c1 == std::string::npos ? std::string::npos : item.find(':', c1 + 1);
    if (eq == std::string::npos || c1 == std::string::npos || c2 == std::string::npos ||
        item.find(':', c2 + 1) != std::string::npos)
      throw GridError("malformed grid axis '" + item + "', expected name=start:end:step");
    GridAxis axis;
    axis.name = item.substr(0, eq);
    if (axis.name.empty() || !std::isalpha(static_cast<unsigned char>(axis.name.front())) ||
        !std::all_of(axis.name.begin(), axis.name.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }))
      throw GridError("malformed grid parameter name '" + axis.name + "'");
    try {
      axis.start = Rational::parse(item.substr(eq + 1, c1 - eq - 1));
      axis.end = Rational::parse(item.substr(c1 + 1, c2 - c1 - 1));
      axis.step = Rational::parse(item.substr(c2 + 1));
    } catch (const Error& e) {
      throw GridError("malformed grid axis '" + item + "': " + e.what());
    }
    if (axis.start > axis.end) throw GridError("grid axis '" + axis.name + "' has start > end");
    if (axis.step.sign() <= 0) throw GridError("grid axis '" + axis.name + "' needs a positive step");
    for (const auto& other : grid.axes)
      if (other.name == axis.name) throw GridError("grid parameter '" + axis.name + "' given twice");
    grid.axes.push_back(std::move(axis));
  }
  std::sort(grid.axes.begin(), grid.axes.end(), [](const GridAxis& a, const GridAxis& b) { return a.name < b.name; });
  return grid;
}

namespace {

void require_coverage(const std::set<std::string>& needed, const GridSpec& grid) {
  const auto names = grid.names();
  for (const auto& v : needed)
    if (std::find(names.begin(), names.end(), v) == names.end())
      throw GridError("grid does not cover parameter '" + v + "'");
}

bool vanishes(const ConstraintSet& cs, const ParameterAssignment& at) {
  return std::all_of(cs.polys.begin(), cs.polys.end(), [&](const Polynomial& p) { return p.evaluate(at).is_zero(); });
}

}  // namespace

std::vector<ParameterAssignment> sweep(const ConstraintSet& cs, const GridSpec& grid) {
  require_coverage(cs.variables(), grid);
  std::vector<ParameterAssignment> out;
  for (auto& p : grid.points())
    if (grid.accepts(p) && vanishes(cs, p)) out.push_back(std::move(p));
  return out;
}

EquivalenceReport equivalent_at(const ConstraintSet& a, const ConstraintSet& b,
                                std::span<const ParameterAssignment> points) {
  EquivalenceReport report;
  for (const auto& p : points) {
    ++report.points_checked;
    const bool sa = vanishes(a, p);
    const bool sb = vanishes(b, p);
    if (sa != sb) {
      report.equivalent = false;
      report.counterexample = p;
      report.first_satisfied = sa;
      report.second_satisfied = sb;
      return report;
    }
  }
  return report;
}

EquivalenceReport equivalent_on_grid(const ConstraintSet& a, const ConstraintSet& b, const GridSpec& grid) {
  auto needed = a.variables();
  needed.merge(b.variables());
  require_coverage(needed, grid);
  std::vector<ParameterAssignment> points;
  for (auto& p : grid.points())
    if (grid.accepts(p)) points.push_back(std::move(p));
  return equivalent_at(a, b, points);
}

}  // namespace lietensor
