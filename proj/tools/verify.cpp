// verify: scenario runner and one-shot wrappers over the iwalab library.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "iwalab/error.hpp"
#include "iwalab/expansion.hpp"
#include "iwalab/harness.hpp"
#include "iwalab/module.hpp"
#include "iwalab/serialize.hpp"

namespace {

using nlohmann::json;
using namespace iwalab;

json read_input(const std::string& path) {
  try {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) raise(ErrorKind::ParseError, "cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, e.what());
  }
}

int error_exit(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::ConfigError:
    case ErrorKind::ConfigMismatch:
    case ErrorKind::ParseError:
    case ErrorKind::LevelTooDeep:
    case ErrorKind::CutoffBeyondFaithful: return 2;
    default: return 1;
  }
}

struct ConfigFlags {
  unsigned p = 5;
  int f = 1, M = 2, N = 1;
  std::string group = "gl2";
  void add(CLI::App* app) {
    app->add_option("--p", p, "residue characteristic")->capture_default_str();
    app->add_option("--f", f, "residue degree")->capture_default_str();
    app->add_option("--M", M, "truncation level")->capture_default_str();
    app->add_option("--N", N, "subgroup level")->capture_default_str();
    app->add_option("--case", group, "gl2 or quat")->capture_default_str();
  }
  PrimeConfig config() const {
    PrimeConfig c{p, f, M, N, parse_group_case(group), 0};
    c.validate();
    return c;
  }
};

int run_file(const std::string& scenario, const std::string& out, const std::string& csv) {
  Scenario s;
  try {
    s = load_scenario(scenario);
  } catch (const Error& e) {
    return error_exit(e);
  }
  const RunOutcome res = run_scenario(s, &std::cerr);
  const std::string text = report_text(res.report);
  std::string target = out;
  if (target.empty())
    if (const char* dir = std::getenv("IWALAB_OUT_DIR"))
      target = (std::filesystem::path(dir) / (s.name + ".json")).string();
  if (target.empty()) {
    std::cout << text;
  } else {
    std::ofstream(target, std::ios::binary) << text;
  }
  if (!csv.empty()) std::ofstream(csv, std::ios::binary) << csv_summary(res);
  std::cerr << "status: " << to_string(res.overall) << "\n";
  return exit_code(res);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iwalab verification runner"};
  app.require_subcommand(0, 1);
  std::string scenario, out, csv;
  app.add_option("scenario", scenario, "scenario JSON file");
  app.add_option("--out", out, "report path (default: stdout, or $IWALAB_OUT_DIR/<name>.json)");
  app.add_option("--csv", csv, "CSV summary path");

  ConfigFlags flags;
  std::string input;
  int cutoff = 8;

  auto* dec = app.add_subcommand("decompose", "digits and omega of a group element");
  flags.add(dec);
  dec->add_option("--in", input, "element JSON {case, entries} (default: stdin)");

  auto* nu = app.add_subcommand("nu", "valuation of a group-algebra element");
  flags.add(nu);
  nu->add_option("--in", input, "algebra element JSON (default: stdin)");
  nu->add_option("--cutoff", cutoff, "weight cutoff T < p^M")->capture_default_str();

  auto* exp = app.add_subcommand("expand", "monomial expansion through a cutoff");
  flags.add(exp);
  exp->add_option("--in", input, "algebra element JSON (default: stdin)");
  exp->add_option("--cutoff", cutoff, "weight cutoff T < p^M")->capture_default_str();

  auto* mex = app.add_subcommand("module-exponent", "minimal annihilator exponent of a module");
  flags.add(mex);
  std::string ideal = "c", grading = "gr";
  mex->add_option("--in", input, "module JSON (default: stdin)");
  mex->add_option("--ideal", ideal, "c, a+c, mixed or an ideal JSON file")->capture_default_str();
  mex->add_option("--grading", grading, "gr, int or res (int and res use J_N)")->capture_default_str();

  auto* list = app.add_subcommand("checks", "list the available checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      for (const auto& c : available_checks()) std::cout << c << "\n";
      return 0;
    }
    if (*dec) {
      const PrimeConfig cfg = flags.config();
      const QuotientGroup G(cfg);
      const GroupElement g = io::element_from_json(read_input(input), cfg.f);
      require(g.kind == cfg.group, ErrorKind::ConfigMismatch, "element case differs from --case");
      if (!G.model().is_canonical(g)) raise(ErrorKind::NotInGroup, "element is not a canonical representative");
      const DigitVector d = G.model().decompose(g);
      std::cout << json{{"digits", io::digits_to_json(d)}, {"omega", G.model().omega(g).to_string()}}.dump() << "\n";
      return 0;
    }
    if (*nu || *exp) {
      const PrimeConfig cfg = flags.config();
      require(cutoff >= 0 && static_cast<std::uint64_t>(cutoff) < cfg.p_pow(cfg.M), ErrorKind::CutoffBeyondFaithful,
              "cutoff must be below p^M");
      const GroupAlgebra alg(cfg);
      const AlgebraElement x = io::algebra_from_json(alg, read_input(input));
      if (*nu) {
        std::cout << json{{"nu", nu_to_string(iwalab::nu(alg, x, cutoff), cutoff)}}.dump() << "\n";
      } else {
        std::cout << io::expansion_to_json(alg.field(), iwalab::expand(alg, x, cutoff)).dump() << "\n";
      }
      return 0;
    }
    if (*mex) {
      const PrimeConfig cfg = flags.config();
      const GroupAlgebra alg(cfg);
      const Fq& F = alg.field();
      const FiniteModule m = io::module_from_json(F, read_input(input), cfg);
      Rng rng(0, "module-exponent");
      validate_module(alg, m, rng);
      IdealSpec J;
      if (ideal == "c" || ideal == "a+c" || ideal == "mixed")
        J = default_ideal(ideal, F);
      else
        J = io::ideal_from_json(F, read_input(ideal), cfg.f);
      AnnihilatorReport rep;
      if (grading == "gr") {
        rep = min_annihilator_exponent(F, grade(F, m, GradingKind::GR, cfg.N), ring_operators(F, m),
                                       ideal_operators(F, m, J), J.name);
      } else if (grading == "int" || grading == "res") {
        const RestrictedModule r = restrict_module(F, m, cfg.N);
        const IdealSpecN JN = build_JN(J, F, cfg.p, cfg.N);
        const GradedModule gm = grading == "int" ? grade(F, m, GradingKind::N_INT, cfg.N) : grade_res(F, r);
        rep = min_annihilator_exponent(F, gm, ring_operators_N(F, r), ideal_operators_N(F, r, JN, true), JN.name);
      } else {
        raise(ErrorKind::ConfigError, "unknown grading '" + grading + "'");
      }
      std::cout << json{{"ideal", rep.ideal}, {"grading", to_string(rep.kind)}, {"ell_min", rep.to_string()},
                        {"bound", rep.bound}}
                       .dump()
                << "\n";
      return 0;
    }
    if (scenario.empty()) {
      std::cerr << app.help();
      return 2;
    }
    return run_file(scenario, out, csv);
  } catch (const Error& e) {
    return error_exit(e);
  }
}
