#include "lietensor/report.hpp"

#include "lietensor/error.hpp"
#include "lietensor/parse.hpp"

namespace lietensor {
namespace {

using nlohmann::json;

template <std::size_t Rank>
json sparse(const ExprArray<Rank>& t) {
  json out = json::array();
  t.for_each_index([&](const auto& idx) {
    if (!t.at(idx).is_zero()) out.push_back({{"indices", idx}, {"value", t.at(idx).str()}});
  });
  return out;
}

/// Components with i < j, k < l and (i, j) <= (k, l).
json independent_curvature(const ExprArray<4>& r) {
  json out = json::array();
  r.for_each_index([&](const auto& idx) {
    const auto [i, j, k, l] = idx;
    if (i < j && k < l && std::pair(i, j) <= std::pair(k, l) && !r.at(idx).is_zero())
      out.push_back({{"indices", idx}, {"value", r.at(idx).str()}});
  });
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (int i = 1; i <= m.dim(); ++i) {
    json row = json::array();
    for (int j = 1; j <= m.dim(); ++j) row.push_back(m(i, j).str());
    out.push_back(row);
  }
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (int i = 1; i <= v.dim(); ++i) out.push_back(v(i).str());
  return out;
}

json structure_json(const StructureReport& s) {
  return {{"Q^4 = id", s.q4_identity},
          {"Q^2 != +-id", s.q2_not_pm_identity},
          {"isometry", s.isometry},
          {"P = Q^2", matrix_json(s.p.m)},
          {"P^2 = id", s.p2_identity},
          {"P != +-id", s.p_not_pm_identity},
          {"trace P", s.trace_p.str()}};
}

template <std::size_t Rank>
ExprArray<Rank> at_point(const ExprArray<Rank>& t, const ParameterAssignment& at) {
  return t.transformed([&](const ScalarExpr& x) { return ScalarExpr(x.evaluate(at)); });
}

json point_json(const Analysis& a, const ParameterAssignment& at) {
  json verdicts = json::object();
  for (const auto& [name, cs] : a.constraints) verdicts[name] = cs ? verdict_json(*cs, evaluate(*cs, at)) : json(nullptr);

  json planes = json::array();
  for (const auto& pc : a.sectional) {
    json value = nullptr;
    if (pc.value) {
      try {
        value = pc.value->evaluate(at).str();
      } catch (const EvaluationError&) {
      }
    }
    planes.push_back({{"plane", {pc.i, pc.j}}, {"value", value}});
  }

  json out = {{"assignment", assignment_json(at)},
              {"verdicts", verdicts},
              {"curvature", independent_curvature(at_point(a.curvature.r, at))},
              {"ricci", matrix_json(at_point(a.ricci.ricci, at))},
              {"scalar_curvature", a.ricci.scalar.evaluate(at).str()},
              {"sectional", planes}};
  out["lee_form"] = a.f_theta ? vector_json(at_point(a.f_theta->theta.theta, at)) : json(nullptr);
  return out;
}

}  // namespace

json constraint_json(const ConstraintSet& cs) {
  json polys = json::array();
  for (const auto& p : cs.polys) polys.push_back(p.str());
  json assumptions = json::array();
  for (const auto& p : cs.assumptions) assumptions.push_back(p.str());
  return {{"polynomials", polys}, {"assumptions", assumptions}};
}

json assignment_json(const ParameterAssignment& at) {
  json out = json::object();
  for (const auto& [name, value] : at.values) out[name] = value.str();
  return out;
}

json verdict_json(const ConstraintSet& cs, const Verdict& v) {
  json residuals = json::array();
  for (const auto& r : v.residuals) residuals.push_back({{"polynomial", cs.polys[r.index].str()}, {"value", r.value.str()}});
  json violated = json::array();
  for (auto i : v.violated_assumptions) violated.push_back(cs.assumptions[i].str());
  return {{"satisfied", v.satisfied}, {"residuals", residuals}, {"violated_assumptions", violated}};
}

json analysis_report(const Analysis& a, const std::optional<ParameterAssignment>& at) {
  json constraints = json::object();
  for (const auto& [name, cs] : a.constraints) constraints[name] = cs ? constraint_json(*cs) : json(nullptr);

  json planes = json::array();
  for (const auto& pc : a.sectional)
    planes.push_back({{"plane", {pc.i, pc.j}}, {"value", pc.value ? json(pc.value->str()) : json(nullptr)}});

  std::size_t nonzero = 0;
  a.curvature.r.for_each_index([&](const auto& idx) { nonzero += a.curvature.r.at(idx).is_zero() ? 0 : 1; });

  json report = {
      {"input", a.input.echo},
      {"conventions",
       {{"connection", "indices [i,j,k]: e_k-coefficient of nabla_{e_i} e_j"},
        {"curvature", "indices [i,j,k,l]: g(R(e_i,e_j)e_k, e_l), R(x,y) = nabla_x nabla_y - nabla_y nabla_x - nabla_[x,y]; "
                      "listed for i<j, k<l, (i,j)<=(k,l)"},
        {"ricci", "rho(e_y,e_z) = g^{ij} R(e_i,e_y,e_z,e_j)"},
        {"sectional", "k(x,y) = R(x,y,x,y) / (g(x,x)g(y,y) - g(x,y)^2)"},
        {"f_tensor", "indices [i,j,k]: g((nabla_{e_i} P) e_j, e_k)"},
        {"lee_form", "theta(e_k) = g^{ij} F(e_i,e_j,e_k)"}}},
      {"validation",
       {{"antisymmetry", a.antisymmetric},
        {"jacobi", jacobi_residual(a.algebra).empty()},
        {"structure", structure_json(a.structure)}}},
      {"connection", sparse(a.connection.gamma)},
      {"curvature", independent_curvature(a.curvature.r)},
      {"curvature_nonzero_components", nonzero},
      {"ricci", matrix_json(a.ricci.ricci)},
      {"scalar_curvature", a.ricci.scalar.str()},
      {"sectional", planes},
      {"f_tensor", a.f_theta ? sparse(a.f_theta->f.f) : json(nullptr)},
      {"lee_form", a.f_theta ? vector_json(a.f_theta->theta.theta) : json(nullptr)},
      {"constraints", constraints},
  };
  if (at) report["point"] = point_json(a, *at);
  return report;
}

GridSpec grid_with_domain(const std::string& grid_text, const AnalysisInput& input) {
  GridSpec grid = parse_grid(grid_text);
  for (const auto& d : input.domain) {
    try {
      grid.filters.push_back(parse_condition(d, input.parameters));
    } catch (const ParseError& e) {
      throw SchemaError("domain entry '" + d + "' is not a condition: " + e.what());
    }
  }
  return grid;
}

json sweep_report(const Analysis& a, const std::string& set_name, const std::string& grid_text) {
  const ConstraintSet& cs = a.constraint_set(set_name);
  const GridSpec grid = grid_with_domain(grid_text, a.input);
  json points = json::array();
  for (const auto& p : sweep(cs, grid)) points.push_back(assignment_json(p));
  json filters = json::array();
  for (const auto& f : grid.filters) filters.push_back(f.text());
  return {{"set", set_name},
          {"grid", grid_text},
          {"filters", filters},
          {"constraints", constraint_json(cs)},
          {"count", points.size()},
          {"points", points}};
}

EquivalenceReport oracle_equivalence(const Curvature04& R, const Endomorphism& q, const GridSpec& grid) {
  if (R.r.dim() != 4 || !(q == circulant_shift(4)))
    throw DimensionError("the oracle compares against the reduced list, which needs dimension 4 and the circulant shift");
  GridSpec raw = grid;
  raw.filters.clear();
  return equivalent_on_grid(r_invariance_constraints(R, q), rloc_reduced_constraints(R), raw);
}

json oracle_report(const Analysis& a, const std::string& grid_text) {
  const EquivalenceReport r = oracle_equivalence(a.curvature, a.q, parse_grid(grid_text));
  json out = {{"grid", grid_text},
              {"full", constraint_json(a.constraint_set("r-invariance"))},
              {"reduced", constraint_json(a.constraint_set("rloc"))},
              {"points_checked", r.points_checked},
              {"equivalent", r.equivalent},
              {"counterexample", nullptr}};
  if (r.counterexample)
    out["counterexample"] = {{"assignment", assignment_json(*r.counterexample)},
                             {"full_satisfied", r.first_satisfied},
                             {"reduced_satisfied", r.second_satisfied}};
  return out;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace lietensor
