#include <doctest.h>

#include <sstream>

#include "iwalab/error.hpp"
#include "iwalab/harness.hpp"
#include "iwalab/serialize.hpp"

using namespace iwalab;
using nlohmann::json;

namespace {

const std::filesystem::path kSource = IWALAB_SOURCE_DIR;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ConfigError;
}

json base_scenario() {
  return json::parse(R"({"config": {"p": 5, "f": 1, "M": 2, "N": 1, "seed": 3},
                         "cases": ["gl2"], "checks": ["maxideals"],
                         "params": {"maxideals": {"cutoff": 6}}})");
}

}  // namespace

TEST_CASE("serialization round trips") {
  for (int f : {1, 2}) {
    const PrimeConfig cfg{5, f, 2, 1, GroupCase::QUAT, 9};
    CHECK(io::config_from_json(io::config_to_json(cfg)).f == f);
    GroupAlgebra alg(PrimeConfig{5, f, 1, 0, GroupCase::QUAT, 0});
    const Fq& F = alg.field();
    for (Fq::Elem x = 0; x < F.order(); ++x) CHECK(io::field_from_json(F, io::field_to_json(F, x)) == x);

    const AlgebraElement x = alg.mul(alg.monomial(std::vector<std::uint32_t>(3 * f, 1)), alg.monomial(std::vector<std::uint32_t>(3 * f, 0)));
    const json j = io::algebra_to_json(alg, x);
    CHECK(io::algebra_to_json(alg, io::algebra_from_json(alg, j)) == j);

    const IdealSpec J = default_ideal("mixed", F);
    const json ij = io::ideal_to_json(F, J);
    CHECK(io::ideal_to_json(F, io::ideal_from_json(F, ij, f)) == ij);
  }
  GroupAlgebra alg(PrimeConfig{5, 1, 2, 1, GroupCase::GL2, 0});
  const Fq& F = alg.field();
  TruncatedAlgebra V(alg, 4);
  const FiniteModule m = truncated_regular_module(V);
  const json mj = io::module_to_json(F, m);
  const FiniteModule back = io::module_from_json(F, mj, alg.config());
  CHECK(back.gens == m.gens);
  CHECK(back.provenance == Provenance::Loaded);
  PrimeConfig other = alg.config();
  other.M = 3;
  CHECK(kind_of([&] { io::module_from_json(F, mj, other); }) == ErrorKind::ConfigMismatch);
}

TEST_CASE("malformed input") {
  GroupAlgebra alg(PrimeConfig{5, 1, 2, 1, GroupCase::GL2, 0});
  const Fq& F = alg.field();
  CHECK(kind_of([&] { io::algebra_from_json(alg, json::parse(R"({"terms": [{"digits": [1, 2]}]})")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([&] { io::matrix_from_json(F, json::parse("[[1, 2], [3]]")); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { io::ideal_from_json(F, json::parse(R"({"f_gens": [[{"m": [1, 2]}]]})"), 1); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([&] {
          io::module_from_json(F, json::parse(R"({"dim": 1, "generators": [[[1]], [[1]]]})"), alg.config());
        }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { io::config_from_json(json::parse(R"({"p": "five"})")); }) == ErrorKind::ParseError);
}

TEST_CASE("scenario validation") {
  CHECK_NOTHROW(parse_scenario(base_scenario(), kSource));

  json j = base_scenario();
  j["config"]["N"] = 2;
  CHECK(kind_of([&] { parse_scenario(j, kSource); }) == ErrorKind::ConfigError);

  j = base_scenario();
  j["checks"].push_back("no_such_check");
  try {
    parse_scenario(j, kSource);
    FAIL("accepted an unknown check");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("checks[1]") != std::string::npos);
  }

  j = base_scenario();
  j["params"]["maxideals"]["cutoff"] = 25;
  CHECK(kind_of([&] { parse_scenario(j, kSource); }) == ErrorKind::ConfigError);

  j = base_scenario();
  j["config"]["p"] = 3;
  CHECK(kind_of([&] { parse_scenario(j, kSource); }) == ErrorKind::ConfigError);

  j = base_scenario();
  j["modules"] = {"does/not/exist.json"};
  CHECK(kind_of([&] { parse_scenario(j, kSource); }) == ErrorKind::ConfigError);

  // Checks that need a level reject N = 0.
  j = base_scenario();
  j["config"]["N"] = 0;
  CHECK_NOTHROW(parse_scenario(j, kSource));
  j["checks"].push_back("exponent_transfer");
  CHECK(kind_of([&] { parse_scenario(j, kSource); }) == ErrorKind::ConfigError);

  CHECK(kind_of([&] { load_scenario(kSource / "scenarios" / "bad_level.json"); }) == ErrorKind::ConfigError);
  for (const auto& name : available_checks()) CHECK(!name.empty());
}

TEST_CASE("smoke scenario") {
  const Scenario s = load_scenario(kSource / "scenarios" / "smoke.json");
  std::ostringstream timing;
  const RunOutcome a = run_scenario(s, &timing);
  CHECK(a.overall == Status::Pass);
  CHECK(exit_code(a) == 0);
  CHECK(a.report["status"] == "pass");
  CHECK(a.report["config"]["cases"].size() == 2);
  CHECK(!timing.str().empty());
  const RunOutcome b = run_scenario(s);
  CHECK(report_text(a.report) == report_text(b.report));
  CHECK(csv_summary(a) == csv_summary(b));
  CHECK(report_text(a.report).find("seconds") == std::string::npos);
}
