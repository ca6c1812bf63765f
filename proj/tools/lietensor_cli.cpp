// Command-line front end: analyze, sweep, oracle.
//
// Exit statuses: 0 success, 2 schema/usage error, 3 Jacobi failure,
// 4 singular metric, 5 structure-check failure under --strict.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lietensor/analysis.hpp"
#include "lietensor/error.hpp"
#include "lietensor/parse.hpp"
#include "lietensor/report.hpp"

namespace {

using namespace lietensor;

enum Exit : int { kOk = 0, kSchema = 2, kJacobi = 3, kSingular = 4, kStructure = 5 };

struct Source {
  std::string input;
  std::string family;

  AnalysisInput load() const {
    if (!input.empty() && !family.empty()) throw SchemaError("give either --input or --family, not both");
    if (!family.empty()) {
      try {
        return family_input(parse_family(family));
      } catch (const LieAlgebraError& e) {
        throw SchemaError(e.what());
      }
    }
    if (input.empty()) throw SchemaError("one of --input or --family is required");
    return load_input(input);
  }
};

void add_source(CLI::App* cmd, Source& src) {
  cmd->add_option("--input", src.input, "Input JSON file");
  cmd->add_option("--family", src.family, "Built-in family: g4.5 or g4.6");
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << text;
}

int fail(int code, const std::string& what) {
  std::cerr << "error: " << what << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature and circulant-structure analysis of Lie algebras with left-invariant metrics"};
  app.require_subcommand(1);

  Source analyze_src;
  std::string assign_text;
  std::string analyze_out;
  bool strict = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute connection, curvature, F, theta and all constraint sets");
  add_source(analyze_cmd, analyze_src);
  analyze_cmd->add_option("--assign", assign_text, "Evaluate at a point, e.g. \"a=1,b=1\"");
  analyze_cmd->add_option("--output", analyze_out, "Write the report here instead of stdout");
  analyze_cmd->add_flag("--strict", strict, "Exit with status 5 if any Q/P structure check fails");

  Source sweep_src;
  std::string set_name;
  std::string sweep_grid;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "List grid points where a constraint set vanishes");
  add_source(sweep_cmd, sweep_src);
  sweep_cmd->add_option("--set", set_name, "r-invariance | rloc | w0 | w1 | einstein | const-curv")->required();
  sweep_cmd->add_option("--grid", sweep_grid, "e.g. \"a=-1:1:1/8;b=-1:1:1/8\"")->required();
  sweep_cmd->add_option("--output", sweep_out, "Write the listing here instead of stdout");

  Source oracle_src;
  std::string oracle_grid;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the full R-invariance set with the reduced list on a grid");
  add_source(oracle_cmd, oracle_src);
  oracle_cmd->add_option("--grid", oracle_grid, "e.g. \"a=-1:1:1/16;b=-1:1:1/16\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kSchema;
  }

  try {
    if (*analyze_cmd) {
      const Analysis a = analyze(analyze_src.load());
      std::optional<ParameterAssignment> at;
      if (!assign_text.empty()) {
        try {
          at = parse_assignment(assign_text);
        } catch (const Error& e) {
          throw SchemaError(std::string("--assign: ") + e.what());
        }
        check_assignment(*at, a.algebra.params());
      }
      emit(render(analysis_report(a, at)), analyze_out);
      if (strict && !a.structure.all_pass()) return fail(kStructure, "Q/P structure checks failed");
      return kOk;
    }
    if (*sweep_cmd) {
      const auto& names = constraint_set_names();
      if (std::find(names.begin(), names.end(), set_name) == names.end())
        throw SchemaError("unknown constraint set '" + set_name + "'");
      const Analysis a = analyze(sweep_src.load());
      emit(render(sweep_report(a, set_name, sweep_grid)), sweep_out);
      return kOk;
    }
    if (*oracle_cmd) {
      const Analysis a = analyze(oracle_src.load());
      emit(render(oracle_report(a, oracle_grid)), "");
      return kOk;
    }
  } catch (const LieAlgebraError& e) {
    return fail(e.kind() == LieAlgebraError::Kind::JacobiViolation ? kJacobi : kSchema, e.what());
  } catch (const MetricError& e) {
    return fail(e.kind() == MetricError::Kind::Singular ? kSingular : kSchema, e.what());
  } catch (const Error& e) {
    return fail(kSchema, e.what());
  }
  return kOk;
}
