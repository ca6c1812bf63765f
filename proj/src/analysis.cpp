#include "lietensor/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "lietensor/error.hpp"
#include "lietensor/parse.hpp"

namespace lietensor {
namespace {

using nlohmann::json;

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

ScalarExpr parse_coef(const json& value, const std::vector<std::string>& params, const std::string& where) {
  if (!value.is_string()) throw SchemaError(where + ": expected an expression string");
  try {
    return parse_scalar(value.get<std::string>(), params);
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

int parse_index(const json& entry, const char* key, int index) {
  const json& v = require(entry, key);
  if (!v.is_number_integer())
    throw SchemaError("brackets[" + std::to_string(index) + "]." + key + " must be an integer");
  return v.get<int>();
}

Matrix parse_matrix(const json& value, int n, const std::vector<std::string>& params, const std::string& name) {
  if (!value.is_array() || static_cast<int>(value.size()) != n)
    throw SchemaError(name + " must be \"" + (name == "Q" ? "circulant-shift" : "identity") + "\" or a " +
                      std::to_string(n) + "x" + std::to_string(n) + " matrix of expression strings");
  Matrix m(n);
  for (int r = 0; r < n; ++r) {
    const json& row = value[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw SchemaError(name + " row " + std::to_string(r + 1) + " must have " + std::to_string(n) + " entries");
    for (int c = 0; c < n; ++c)
      m(r + 1, c + 1) =
          parse_coef(row[c], params, name + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
  }
  return m;
}

}  // namespace

AnalysisInput parse_input(const json& doc) {
  if (!doc.is_object()) throw SchemaError("input must be a JSON object");
  AnalysisInput in;
  in.echo = doc;

  const json& dim = require(doc, "dimension");
  if (!dim.is_number_integer() || dim.get<int>() < 2) throw SchemaError("dimension must be an integer >= 2");
  in.dimension = dim.get<int>();

  if (doc.contains("parameters")) {
    const json& ps = doc.at("parameters");
    if (!ps.is_array()) throw SchemaError("parameters must be an array of names");
    for (const auto& p : ps) {
      if (!p.is_string()) throw SchemaError("parameter names must be strings");
      const auto name = p.get<std::string>();
      const bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name.front())) &&
                      std::all_of(name.begin(), name.end(), [](char ch) {
                        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
                      });
      if (!ok) throw SchemaError("invalid parameter name '" + name + "'");
      if (std::find(in.parameters.begin(), in.parameters.end(), name) != in.parameters.end())
        throw SchemaError("parameter '" + name + "' declared twice");
      in.parameters.push_back(name);
    }
  }

  const json& brackets = require(doc, "brackets");
  if (!brackets.is_array()) throw SchemaError("brackets must be an array");
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const json& e = brackets[n];
    const int idx = static_cast<int>(n);
    if (!e.is_object()) throw SchemaError("brackets[" + std::to_string(n) + "] must be an object");
    BracketEntry entry{parse_index(e, "i", idx), parse_index(e, "j", idx), parse_index(e, "k", idx),
                       parse_coef(require(e, "coef"), in.parameters, "brackets[" + std::to_string(n) + "].coef")};
    in.brackets.push_back(std::move(entry));
  }

  if (doc.contains("metric")) {
    const json& m = doc.at("metric");
    if (!(m.is_string() && m.get<std::string>() == "identity"))
      in.metric = parse_matrix(m, in.dimension, in.parameters, "metric");
  }
  if (doc.contains("Q")) {
    const json& q = doc.at("Q");
    if (!(q.is_string() && q.get<std::string>() == "circulant-shift"))
      in.q = parse_matrix(q, in.dimension, in.parameters, "Q");
  }
  if (doc.contains("domain")) {
    const json& d = doc.at("domain");
    if (!d.is_array()) throw SchemaError("domain must be an array of strings");
    for (const auto& s : d) {
      if (!s.is_string()) throw SchemaError("domain entries must be strings");
      const auto text = s.get<std::string>();
      try {
        parse_condition(text, in.parameters);  // metadata, but it must be sweepable
      } catch (const ParseError& e) {
        throw SchemaError("domain entry '" + text + "' is not a condition: " + e.what());
      }
      in.domain.push_back(text);
    }
  }
  return in;
}

AnalysisInput load_input(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw SchemaError("cannot open input file '" + path + "'");
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("input is not valid JSON: ") + e.what());
  }
  return parse_input(doc);
}

json family_document(Family f) {
  const ScalarExpr a = ScalarExpr::variable("a");
  const ScalarExpr b = ScalarExpr::variable("b");
  json brackets = json::array();
  for (const auto& e : family_brackets(f, a, b))
    brackets.push_back({{"i", e.i}, {"j", e.j}, {"k", e.k}, {"coef", e.coef.str()}});
  return {{"dimension", 4},
          {"family", family_name(f)},
          {"parameters", {"a", "b"}},
          {"brackets", brackets},
          {"metric", "identity"},
          {"Q", "circulant-shift"},
          {"domain", family_domain(f)}};
}

AnalysisInput family_input(Family f) { return parse_input(family_document(f)); }

const std::vector<std::string>& constraint_set_names() {
  static const std::vector<std::string> names = {"r-invariance", "rloc", "w0", "w1", "einstein", "const-curv"};
  return names;
}

const ConstraintSet& Analysis::constraint_set(const std::string& name) const {
  auto it = constraints.find(name);
  if (it == constraints.end()) throw Error("unknown constraint set '" + name + "'");
  if (!it->second) throw Error("constraint set '" + name + "' is not defined for this input");
  return *it->second;
}

Analysis analyze(const AnalysisInput& input) {
  LieAlgebra algebra = make_lie_algebra(input.dimension, input.parameters, input.brackets, input.domain);
  const int n = algebra.dim();
  MetricTensor metric = input.metric ? MetricTensor::from_matrix(*input.metric) : MetricTensor::identity(n);
  Endomorphism q = input.q ? Endomorphism{*input.q} : circulant_shift(n);
  StructureReport structure = check_q_structure(q, metric);

  Connection conn = levi_civita(algebra, metric);
  Curvature04 R = curvature(algebra, metric, conn);
  RicciScalar rs = ricci_and_scalar(R, metric);

  std::vector<PlaneCurvature> planes;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PlaneCurvature pc{i, j, std::nullopt};
      try {
        pc.value = sectional(R, metric, basis_vector(n, i), basis_vector(n, j));
      } catch (const DegeneratePlane&) {
      }
      planes.push_back(std::move(pc));
    }

  std::map<std::string, std::optional<ConstraintSet>> sets;
  for (const auto& name : constraint_set_names()) sets[name] = std::nullopt;
  sets["r-invariance"] = r_invariance_constraints(R, q);
  const bool circulant4 = n == 4 && q == circulant_shift(4);
  if (circulant4) sets["rloc"] = rloc_reduced_constraints(R);

  std::optional<FTheta> ft;
  if (structure.p2_identity) {
    ft = f_and_theta(conn, structure.p, metric);
    sets["w0"] = w0_constraints(ft->f);
    if (n == 4) sets["w1"] = w1_constraints(ft->f, ft->theta, metric, structure.p);
  }
  sets["einstein"] = einstein_constraints(rs, metric);
  try {
    sets["const-curv"] = constant_curvature_constraints(R, metric);
  } catch (const DegeneratePlane&) {
  }

  const bool antisymmetric = is_antisymmetric(algebra.structure_constants());
  return Analysis{input,
                  std::move(algebra),
                  antisymmetric,
                  std::move(metric),
                  std::move(q),
                  std::move(structure),
                  std::move(conn),
                  std::move(R),
                  std::move(rs),
                  std::move(planes),
                  std::move(ft),
                  std::move(sets)};
}

void check_assignment(const ParameterAssignment& at, const std::vector<std::string>& params) {
  for (const auto& [name, value] : at.values)
    if (std::find(params.begin(), params.end(), name) == params.end())
      throw SchemaError("assignment names undeclared parameter '" + name + "'");
  for (const auto& p : params)
    if (!at.find(p)) throw SchemaError("assignment does not give a value for parameter '" + p + "'");
}

}  // namespace lietensor
