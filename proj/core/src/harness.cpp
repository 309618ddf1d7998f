#include "iwalab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "iwalab/error.hpp"
#include "iwalab/expansion.hpp"
#include "iwalab/graded.hpp"
#include "iwalab/module.hpp"
#include "iwalab/padic.hpp"
#include "iwalab/random.hpp"
#include "iwalab/serialize.hpp"
#include "iwalab/tau.hpp"

namespace iwalab {

using nlohmann::json;

namespace {

// Context shared by the checks of one (scenario, case) pair.
struct RunContext {
  const Scenario& scenario;
  PrimeConfig cfg;
  const GroupAlgebra& alg;
  std::vector<FiniteModule> modules;  // loaded from files
  std::vector<IdealSpec> ideals;      // defaults followed by loaded ones

  const json& params(const std::string& check) const {
    static const json empty = json::object();
    const auto it = scenario.params.find(check);
    return it == scenario.params.end() ? empty : *it;
  }
  int param(const std::string& check, const char* key, int def) const {
    const json& p = params(check);
    return p.contains(key) ? p[key].get<int>() : def;
  }
  Rng rng(const std::string& check) const { return Rng(cfg.seed, check + "/" + std::string(to_string(cfg.group))); }
};

using CheckFn = std::function<std::vector<CheckResult>(RunContext&)>;

struct CheckInfo {
  std::string name;
  bool per_case = true;
  bool needs_level = false;  // requires 1 <= N < M
  std::vector<std::pair<const char*, int>> cutoffs;  // parameter name, default
  CheckFn run;
};

// Folds per-item results into one, prefixing each witness with its label.
void absorb(CheckResult& into, const std::string& label, const CheckResult& item) {
  json entry = item.data;
  entry["status"] = to_string(item.status);
  into.data["items"][label] = entry;
  if (item.status == Status::Pass) return;
  if (item.data.contains("failures"))
    for (const auto& w : item.data["failures"]) into.fail(label + ": " + w.get<std::string>());
  else
    into.fail(label + ": " + std::string(to_string(item.status)));
}

std::vector<FiniteModule> corpus_with_duals(RunContext& ctx, const std::string& check) {
  const Fq& F = ctx.alg.field();
  auto base = module_corpus(ctx.alg, sub_seed(ctx.cfg.seed, "corpus"), ctx.param(check, "quotients", 10),
                            static_cast<std::size_t>(ctx.param(check, "max_dim", 40)));
  for (const auto& m : ctx.modules) base.push_back(m);
  std::vector<FiniteModule> out;
  for (const auto& m : base) {
    out.push_back(m);
    if (ctx.param(check, "duals", 1)) out.push_back(dualize(F, m));
  }
  return out;
}

// --- individual checks ---------------------------------------------------

std::vector<CheckResult> run_arithmetic(RunContext& ctx) {
  CheckResult r{"arithmetic_oracle", Status::Pass, "fixed p=5 values and digit round trips", {}};
  {
    const UnramifiedRing R(5, 1, 2);
    const std::uint64_t teich2 = R.teichmuller(R.residue_field().from_int(2)).c[0];
    const std::uint64_t s21 = R.hensel_sqrt(R.from_int(21)).c[0];
    const std::uint64_t s6 = R.hensel_sqrt(R.from_int(6)).c[0];
    r.data["teichmuller_2_mod_25"] = teich2;
    r.data["hensel_sqrt_21_mod_25"] = s21;
    r.data["hensel_sqrt_6_mod_25"] = s6;
    if (teich2 != 7) r.fail("[2] = " + std::to_string(teich2) + " mod 25, expected 7");
    if (s21 != 11) r.fail("sqrt(21) = " + std::to_string(s21) + " mod 25, expected 11");
    if (s6 != 16) r.fail("sqrt(6) = " + std::to_string(s6) + " mod 25, expected 16");

    const QuotientGroup G(PrimeConfig{5, 1, 2, 1, GroupCase::GL2, 0});
    const auto& model = G.model();
    const GroupElement ba = model.multiply(model.basis()[1], model.basis()[0]);
    const DigitVector d = model.decompose(ba);
    r.data["digits_B0A0"] = d.x;
    if (d.x != std::vector<std::uint64_t>{21, 6, 24}) r.fail("digits of B_0 A_0 differ from (21, 6, 24)");
    if (!(model.compose(d) == ba)) r.fail("B_0 A_0 does not recompose from its digits");
  }
  // Round trips in the configured group for every case.
  for (GroupCase gc : ctx.scenario.cases) {
    PrimeConfig c = ctx.cfg;
    c.group = gc;
    const QuotientGroup G(c);
    Rng rng(ctx.cfg.seed, "arithmetic_oracle/" + std::string(to_string(gc)));
    const int samples = ctx.param("arithmetic_oracle", "samples", 200);
    int bad = 0;
    for (int s = 0; s < samples; ++s) {
      DigitVector d;
      for (int i = 0; i < G.rank(); ++i) d.x.push_back(rng.below(G.digit_modulus()));
      const GroupElement g = G.model().compose(d);
      if (!(G.model().decompose(g) == d) || !(G.model().decompose_by_refinement(g) == d)) {
        if (++bad <= 3) r.fail(std::string(to_string(gc)) + ": digit round trip fails");
      }
    }
    r.data["round_trips"][std::string(to_string(gc))] = samples;
  }
  return {r};
}

std::vector<CheckResult> run_maxideals(RunContext& ctx) {
  const int T = ctx.param("maxideals", "cutoff", 8);
  CheckResult r{"maxideals", Status::Pass, "m_G^j equals the nu >= j span through weight T", {}};
  TruncatedAlgebra V(ctx.alg, T);
  const auto chain = m_adic_chain(V, T);
  r.data["cutoff"] = T;
  for (int j = 0; j <= T; ++j) {
    const Subspace w = V.weight_at_least(j);
    r.data["dims"].push_back(chain[j].dim());
    if (!(chain[j] == w))
      r.fail("j=" + std::to_string(j) + ": span dim " + std::to_string(chain[j].dim()) + ", nu>=j dim " +
             std::to_string(w.dim()));
  }
  return {r};
}

std::vector<CheckResult> run_commutator_formula(RunContext& ctx) {
  CheckResult r{"commutator_formula", Status::Pass, "[(1+[zeta]Pi),(1+gamma Pi)] mod p Pi O_D", {}};
  const auto rep = check_quaternion_commutator_formula(ctx.cfg.p, ctx.cfg.f);
  r.data["checked"] = rep.checked;
  for (const auto& w : rep.failures) r.fail(w);
  if (rep.checked == 0) r.fail("no gamma checked");
  return {r};
}

std::vector<CheckResult> run_centrality(RunContext& ctx) {
  const int T1 = ctx.param("centrality", "cutoff_pairs", 8);
  const int T2 = ctx.param("centrality", "cutoff_powers", 12);
  const std::uint32_t p = ctx.cfg.p;
  const int f = ctx.cfg.f;
  CheckResult r{"centrality", Status::Pass, "p-th powers of a_0, b_0, c_0 commute", {}};
  auto pw = [&](const TruncatedAlgebra& V, int i, std::uint32_t e) {
    Exponents k(3 * f, 0);
    k[i] = e;
    return V.monomial(k);
  };
  const int ia = 0, ib = f, ic = 2 * f;
  {
    TruncatedAlgebra V(ctx.alg, T1);
    const Vec x = V.commutator(pw(V, ia, p), pw(V, ib, 1));
    const Vec y = V.commutator(pw(V, ib, p), pw(V, ia, 1));
    r.data["element"]["a^p,b"] = nu_to_string(V.nu(x), T1);
    r.data["element"]["b^p,a"] = nu_to_string(V.nu(y), T1);
    if (!is_zero(x)) r.fail("[z_a^p, z_b] nonzero through weight " + std::to_string(T1));
    if (!is_zero(y)) r.fail("[z_b^p, z_a] nonzero through weight " + std::to_string(T1));
  }
  TruncatedAlgebra V(ctx.alg, T2);
  const int idx[3] = {ia, ib, ic};
  const char* names[3] = {"a^p", "b^p", "c^p"};
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t) {
      const Vec x = V.commutator(pw(V, idx[s], p), pw(V, idx[t], p));
      const std::string key = std::string(names[s]) + "," + names[t];
      r.data["element"][key] = nu_to_string(V.nu(x), T2);
      if (!is_zero(x)) r.fail("[" + key + "] nonzero through weight " + std::to_string(T2));
    }
  // Class level: the p-th power classes commute with every degree-one class.
  GradedRing R(V);
  const GradedClass classes[3] = {R.pow(R.a(0), p), R.pow(R.b(0), p), R.pow(R.c(0), p)};
  for (int s = 0; s < 3; ++s) {
    if (classes[s].degree + 1 > T2) continue;
    const bool ok = check_centrality(R, classes[s]);
    r.data["class_central"][names[s]] = ok;
    if (!ok) r.fail(std::string(names[s]) + " is not central in gr");
  }
  const bool c_central = check_centrality(R, R.c(0));
  r.data["class_central"]["c"] = c_central;
  if (!c_central) r.fail("c_0 is not central in gr");
  for (std::uint64_t l : {std::uint64_t{2}, std::uint64_t{p}}) {
    const bool ok = check_power_commutator_identity(R, ia, R.b(0), l);
    r.data["power_commutator_identity"][std::to_string(l)] = ok;
    if (!ok) r.fail("[a^l, b] = l a^{l-1} [a, b] fails for l=" + std::to_string(l));
  }
  return {r};
}

std::vector<CheckResult> run_hilbert(RunContext& ctx) {
  const int jmax = ctx.param("hilbert", "jmax", 6);
  CheckResult r{"hilbert", Status::Pass, "graded dimensions and the regular sequence c_0..c_{f-1}", {}};
  const auto dims = hilbert_dims(ctx.alg, jmax, false);
  const auto qdims = hilbert_dims(ctx.alg, jmax, true);
  const auto odims = hilbert_oracle(ctx.cfg.f, jmax, false);
  const auto oq = hilbert_oracle(ctx.cfg.f, jmax, true);
  r.data["gr"] = dims;
  r.data["gr_mod_c"] = qdims;
  r.data["oracle_gr"] = odims;
  r.data["oracle_gr_mod_c"] = oq;
  if (dims != odims) r.fail("dim gr^j differs from the monomial count");
  if (qdims != oq) r.fail("dim (gr/c)^j differs from the polynomial count");
  TruncatedAlgebra V(ctx.alg, jmax + 2);
  GradedRing R(V);
  const auto reg = check_regular_sequence(R);
  r.data["regular_sequence"] = reg.ok;
  for (const auto& w : reg.failures) r.fail(w);
  return {r};
}

std::vector<CheckResult> run_sandwich(RunContext& ctx) {
  const int T = ctx.param("sandwich", "cutoff", 24);
  const int kmax = ctx.param("sandwich", "k_max", 3);
  const int first = ctx.param("sandwich", "first_samples", 200);
  const int second = ctx.param("sandwich", "second_samples", 50);
  CheckResult r{"sandwich", Status::Pass, "n_k in m^{k p^N} in n_{k-4f}", {}};
  CheckResult tc{"tau_contract", Status::Pass, "nu(tau x) = nu(x) < nu(tau x - x) on every touched monomial", {}};
  TruncatedAlgebra V(ctx.alg, T);
  Rng rng = ctx.rng("sandwich");
  std::uint64_t checked = 0, failures = 0;
  for (int k = 0; k <= kmax; ++k) {
    const CheckResult item = check_sandwich(ctx.alg, V, k, ctx.cfg.N, first, second, rng);
    absorb(r, "k=" + std::to_string(k), item);
    checked += item.data["tau_contract"]["checked"].get<std::uint64_t>();
    failures += item.data["tau_contract"]["failures"].get<std::uint64_t>();
  }
  tc.data["checked"] = checked;
  tc.data["failures_count"] = failures;
  if (failures) tc.fail(std::to_string(failures) + " monomials break the contract");
  if (!checked) tc.fail("no monomial was touched");
  return {r, tc};
}

std::vector<CheckResult> run_pigeonhole(RunContext& ctx) {
  const int T = ctx.param("pigeonhole", "cutoff", 16);
  const int samples = ctx.param("pigeonhole", "samples", 20);
  CheckResult r{"pigeonhole", Status::Pass, "J^{(f+n)p^N} in (f~) + c and J_N in J", {}};
  TruncatedAlgebra V(ctx.alg, T);
  GradedRing R(V);
  Rng rng = ctx.rng("pigeonhole");
  for (const IdealSpec& J : ctx.ideals) absorb(r, J.name, check_pigeonhole(R, J, ctx.cfg.N, samples, rng));
  return {r};
}

std::vector<CheckResult> run_exponent_transfer(RunContext& ctx) {
  CheckResult r{"exponent_transfer", Status::Pass, "implications (i)-(v) between measured exponents", {}};
  const Fq& F = ctx.alg.field();
  const auto mods = corpus_with_duals(ctx, "exponent_transfer");
  r.data["modules"] = mods.size();
  for (const auto& m : mods)
    for (const IdealSpec& J : ctx.ideals)
      absorb(r, m.label + " | " + J.name, check_exponent_transfer(F, m, J, ctx.cfg.N));
  return {r};
}

std::vector<CheckResult> run_restriction(RunContext& ctx) {
  CheckResult r{"restriction_determinism", Status::Pass, "gr_res exponent of the dual from G^{p^N} data alone", {}};
  const Fq& F = ctx.alg.field();
  const auto mods = corpus_with_duals(ctx, "restriction_determinism");
  const int changes = ctx.param("restriction_determinism", "basis_changes", 5);
  Rng rng = ctx.rng("restriction_determinism");
  r.data["modules"] = mods.size();
  for (const auto& m : mods)
    for (const IdealSpec& J : ctx.ideals)
      absorb(r, m.label + " | " + J.name, restriction_determinism(F, ctx.alg, m, J, ctx.cfg.N, rng, changes));
  return {r};
}

std::vector<CheckResult> run_modules(RunContext& ctx) {
  CheckResult r{"module_validity", Status::Pass, "multiplicativity, dual involution and grading sanity", {}};
  const Fq& F = ctx.alg.field();
  const auto samples = static_cast<std::uint64_t>(ctx.param("module_validity", "samples", 10000));
  const int iso_dim = ctx.param("module_validity", "iso_max_dim", 20);
  Rng rng = ctx.rng("module_validity");
  auto mods = module_corpus(ctx.alg, sub_seed(ctx.cfg.seed, "corpus"), ctx.param("module_validity", "quotients", 10),
                            static_cast<std::size_t>(ctx.param("module_validity", "max_dim", 40)));
  for (const auto& m : ctx.modules) mods.push_back(m);
  for (const auto& m : mods) {
    CheckResult item{m.label, Status::Pass, "", {}};
    const auto mr = check_multiplicativity(ctx.alg, m, rng, samples);
    item.data["dim"] = m.dim;
    item.data["pairs"] = mr.pairs;
    item.data["exhaustive"] = mr.exhaustive;
    if (!mr.ok()) {
      item.fail(*mr.witness);
      absorb(r, m.label, item);
      continue;
    }
    std::vector<GradingKind> kinds{GradingKind::GR};
    if (ctx.cfg.N >= 1 && ctx.cfg.N < ctx.cfg.M) kinds = {GradingKind::GR, GradingKind::N_INT, GradingKind::N_RES};
    for (GradingKind k : kinds) {
      const GradedModule gm = grade(F, m, k, ctx.cfg.N);
      const auto pieces = gm.piece_dims();
      std::size_t total = 0;
      for (auto d : pieces) total += d;
      item.data["pieces"][to_string(k)] = pieces;
      if (total != m.dim) item.fail(to_string(k) + ": piece dimensions do not sum to dim");
      if (auto s = gm.first_stall()) {
        item.data["stall"][to_string(k)] = *s;
        item.fail(to_string(k) + ": chain stalls at index " + std::to_string(*s));
      }
    }
    if (m.dim <= static_cast<std::size_t>(iso_dim)) {
      const FiniteModule dd = change_basis(F, dualize(F, dualize(F, m)), random_invertible(F, m.dim, rng));
      const auto iso = find_isomorphism(F, m, dd, rng);
      item.data["double_dual_isomorphic"] = iso.has_value();
      if (!iso) item.fail("no isomorphism to the double dual found");
    }
    absorb(r, m.label, item);
  }
  r.data["modules"] = mods.size();
  return {r};
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> reg = {
      {"arithmetic_oracle", false, false, {}, run_arithmetic},
      {"maxideals", true, false, {{"cutoff", 8}}, run_maxideals},
      {"commutator_formula", false, false, {}, run_commutator_formula},
      {"centrality", true, false, {{"cutoff_pairs", 8}, {"cutoff_powers", 12}}, run_centrality},
      {"hilbert", true, false, {}, run_hilbert},
      {"sandwich", true, true, {{"cutoff", 24}}, run_sandwich},
      {"pigeonhole", true, true, {{"cutoff", 16}}, run_pigeonhole},
      {"module_validity", true, false, {}, run_modules},
      {"exponent_transfer", true, true, {}, run_exponent_transfer},
      {"restriction_determinism", true, true, {}, run_restriction},
  };
  return reg;
}

const CheckInfo* find_check(const std::string& name) {
  for (const auto& c : registry())
    if (c.name == name) return &c;
  return nullptr;
}

[[noreturn]] void config_error(const std::string& where, const std::string& what) {
  raise(ErrorKind::ConfigError, where + ": " + what);
}

}  // namespace

std::vector<std::string> available_checks() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.name);
  return out;
}

Scenario parse_scenario(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) config_error("scenario", "must be a JSON object");
  Scenario s;
  try {
    s.name = j.value("name", std::string("unnamed"));
    if (j.contains("config")) s.cfg = io::config_from_json(j["config"]);
    if (j.contains("cases")) {
      for (const auto& c : j["cases"]) s.cases.push_back(parse_group_case(c.get<std::string>()));
    } else {
      s.cases.push_back(s.cfg.group);
    }
    if (!j.contains("checks") || !j["checks"].is_array()) config_error("checks", "missing or not an array");
    for (std::size_t i = 0; i < j["checks"].size(); ++i) {
      const auto name = j["checks"][i].get<std::string>();
      if (!find_check(name)) config_error("checks[" + std::to_string(i) + "]", "unknown check '" + name + "'");
      s.checks.push_back(name);
    }
    if (j.contains("params")) {
      if (!j["params"].is_object()) config_error("params", "must be an object");
      s.params = j["params"];
    }
    for (const char* key : {"modules", "ideals"}) {
      if (!j.contains(key)) continue;
      for (std::size_t i = 0; i < j[key].size(); ++i) {
        std::filesystem::path p = j[key][i].get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        if (!std::filesystem::exists(p))
          config_error(std::string(key) + "[" + std::to_string(i) + "]", "file not found: " + p.string());
        (std::string(key) == "modules" ? s.module_files : s.ideal_files).push_back(p);
      }
    }
  } catch (const json::exception& e) {
    config_error("scenario", e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ConfigError) throw;
    config_error("scenario", e.what());
  }
  if (s.cases.empty()) config_error("cases", "empty");

  try {
    s.cfg.validate();
  } catch (const Error& e) {
    config_error("config", e.what());
  }
  const std::uint64_t faithful = s.cfg.p_pow(s.cfg.M);
  for (const auto& name : s.checks) {
    const CheckInfo& info = *find_check(name);
    if (info.needs_level && (s.cfg.N < 1 || s.cfg.N >= s.cfg.M))
      config_error("config.N", "check '" + name + "' needs 1 <= N < M");
    for (const auto& [key, def] : info.cutoffs) {
      int T = def;
      if (s.params.contains(name) && s.params[name].contains(key)) T = s.params[name][key].get<int>();
      if (T < 1 || static_cast<std::uint64_t>(T) >= faithful)
        config_error("params." + name + "." + key,
                     "cutoff " + std::to_string(T) + " must lie in [1, p^M) = [1, " + std::to_string(faithful) + ")");
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) config_error(file.string(), "cannot open scenario");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    config_error(file.string(), e.what());
  }
  return parse_scenario(j, file.parent_path());
}

namespace {

json load_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) raise(ErrorKind::ParseError, "cannot open " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    raise(ErrorKind::ParseError, p.string() + ": " + e.what());
  }
}

json result_json(const CheckResult& r) {
  return {{"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}, {"data", r.data}};
}

}  // namespace

RunOutcome run_scenario(const Scenario& s, std::ostream* timing) {
  RunOutcome out;
  using clock = std::chrono::steady_clock;
  auto time_it = [&](const std::string& label, auto&& fn) {
    const auto t0 = clock::now();
    fn();
    if (timing)
      *timing << label << ": " << std::chrono::duration<double>(clock::now() - t0).count() << " s" << std::endl;
  };
  auto guarded = [&](const std::string& name, const std::string& suffix, const std::function<std::vector<CheckResult>()>& fn) {
    std::vector<CheckResult> rs;
    try {
      rs = fn();
    } catch (const Error& e) {
      CheckResult r{name, Status::Fail, "raised " + std::string(to_string(e.kind())), {}};
      r.fail(e.what());
      rs = {r};
    }
    for (auto& r : rs) {
      r.name += suffix;
      out.results.push_back(std::move(r));
    }
  };

  for (const auto& name : s.checks) {
    const CheckInfo& info = *find_check(name);
    if (!info.per_case) {
      PrimeConfig cfg = s.cfg;
      cfg.group = s.cases.front();
      time_it(name, [&] {
        guarded(name, "", [&] {
          GroupAlgebra alg(cfg);
          RunContext ctx{s, cfg, alg, {}, {}};
          return info.run(ctx);
        });
      });
      continue;
    }
    for (GroupCase gc : s.cases) {
      PrimeConfig cfg = s.cfg;
      cfg.group = gc;
      const std::string suffix = "/" + std::string(to_string(gc));
      time_it(name + suffix, [&] {
        guarded(name, suffix, [&] {
          GroupAlgebra alg(cfg);
          RunContext ctx{s, cfg, alg, {}, {}};
          for (const auto& n : default_ideal_names()) ctx.ideals.push_back(default_ideal(n, alg.field()));
          for (const auto& p : s.ideal_files)
            ctx.ideals.push_back(io::ideal_from_json(alg.field(), load_json_file(p), cfg.f));
          for (const auto& p : s.module_files) {
            const json mj = load_json_file(p);
            if (mj.contains("case") && parse_group_case(mj["case"].get<std::string>()) != gc) continue;
            ctx.modules.push_back(io::module_from_json(alg.field(), mj, cfg));
          }
          return info.run(ctx);
        });
      });
    }
  }
  std::stable_sort(out.results.begin(), out.results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });

  json checks = json::array();
  std::map<std::string, int> counts{{"pass", 0}, {"fail", 0}, {"indeterminate", 0}};
  for (const auto& r : out.results) {
    checks.push_back(result_json(r));
    ++counts[std::string(to_string(r.status))];
    if (r.status == Status::Fail) out.overall = Status::Fail;
    else if (r.status == Status::Indeterminate && out.overall == Status::Pass) out.overall = Status::Indeterminate;
  }
  json config = io::config_to_json(s.cfg);
  config.erase("case");
  for (GroupCase gc : s.cases) config["cases"].push_back(std::string(to_string(gc)));
  out.report = {{"version", kVersion},
                {"scenario", s.name},
                {"config", config},
                {"params", s.params},
                {"checks", checks},
                {"summary", counts},
                {"status", to_string(out.overall)}};
  return out;
}

std::string report_text(const json& report) { return report.dump(2) + "\n"; }

std::string csv_summary(const RunOutcome& out) {
  std::ostringstream os;
  os << "name,status,failures\n";
  for (const auto& r : out.results) {
    const std::size_t n = r.data.contains("failures") ? r.data["failures"].size() : 0;
    os << r.name << "," << to_string(r.status) << "," << n << "\n";
  }
  return os.str();
}

int exit_code(const RunOutcome& out) { return out.overall == Status::Pass ? 0 : 1; }

}  // namespace iwalab
