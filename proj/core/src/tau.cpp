#include "iwalab/tau.hpp"

#include <algorithm>
#include <map>

#include "iwalab/error.hpp"

namespace iwalab {

TauSplit tau_split(const Exponents& x, std::uint64_t q) {
  TauSplit s{x, x};
  for (std::size_t i = 0; i < x.size(); ++i) {
    s.floor_part[i] = static_cast<std::uint32_t>(x[i] / q * q);
    s.frac_part[i] = static_cast<std::uint32_t>(x[i] % q);
  }
  return s;
}

AlgebraElement tau_rewrite(const GroupAlgebra& alg, const Exponents& x, int N) {
  const auto s = tau_split(x, alg.config().p_pow(N));
  return alg.mul(alg.monomial(s.floor_part), alg.monomial(s.frac_part));
}

Vec tau_truncated(const TruncatedAlgebra& V, const Exponents& x, int N) {
  const auto s = tau_split(x, V.algebra().config().p_pow(N));
  return V.left_monomial(s.floor_part, V.monomial(s.frac_part));
}

TauContract check_tau_contract(const TruncatedAlgebra& V, const Exponents& x, int N) {
  TauContract c;
  c.nu_x = monomial_weight(x, V.space().degree());
  require(c.nu_x <= V.cutoff(), ErrorKind::CutoffBeyondFaithful, "monomial weight exceeds the cutoff");
  const Vec t = tau_truncated(V, x, N);
  c.nu_tau = V.nu(t);
  c.nu_diff = V.nu(vec_sub(V.field(), t, V.monomial(x)));
  c.ok = c.nu_tau == c.nu_x && (!c.nu_diff || *c.nu_diff > c.nu_x);
  return c;
}

// ---------------------------------------------------------------- rewriter

TauRewriter::TauRewriter(const TruncatedAlgebra& V, int N)
    : V_(V), N_(N), tau_cache_(V.dim()), contract_cache_(V.dim()) {}

const Vec& TauRewriter::tau_of(std::size_t m) {
  if (!tau_cache_[m]) tau_cache_[m] = tau_truncated(V_, V_.space().exponents(m), N_);
  return *tau_cache_[m];
}

const TauContract& TauRewriter::contract(std::size_t m) {
  if (!contract_cache_[m]) {
    contract_cache_[m] = check_tau_contract(V_, V_.space().exponents(m), N_);
    touched_.emplace_back(m, *contract_cache_[m]);
  }
  return *contract_cache_[m];
}

SandwichTranscript TauRewriter::decompose(const Exponents& x) {
  const Fq& F = V_.field();
  const auto& S = V_.space();
  SandwichTranscript t;
  t.x = x;
  Vec r = V_.monomial(x);
  int last = -1;
  while (auto v = V_.nu(r)) {
    if (*v <= last) raise(ErrorKind::NonConvergent, "residue weight did not increase past " + std::to_string(last));
    last = *v;
    ++t.iterations;
    Vec next = r;
    for (std::size_t m = S.begin_of_weight(*v); m < S.end_of_weight(*v); ++m) {
      if (r[m] == 0) continue;
      contract(m);
      t.terms.emplace_back(S.exponents(m), r[m]);
      vec_axpy(F, next, F.neg(r[m]), tau_of(m));
    }
    r = std::move(next);
  }
  return t;
}

bool verify_transcript(const GroupAlgebra& alg, const MonomialSpace& space, const SandwichTranscript& t, int N) {
  const std::uint64_t q = alg.config().p_pow(N);
  std::map<Exponents, AlgebraElement> by_floor;
  std::map<Exponents, AlgebraElement> frac_lifts;
  for (const auto& [m, c] : t.terms) {
    const auto s = tau_split(m, q);
    auto it = frac_lifts.find(s.frac_part);
    if (it == frac_lifts.end()) it = frac_lifts.emplace(s.frac_part, alg.monomial(s.frac_part)).first;
    alg.axpy(by_floor[s.floor_part], c, it->second);
  }
  AlgebraElement total;
  for (const auto& [fl, e] : by_floor) alg.axpy(total, 1, alg.mul(alg.monomial(fl), e));
  Vec v = expand_dense(alg, space, total);
  const auto idx = space.find(t.x);
  if (!idx) return false;
  v[*idx] = alg.field().sub(v[*idx], 1);
  return is_zero(v);
}

// ---------------------------------------------------------------- checks

namespace {

std::string exps_to_string(const Exponents& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

}  // namespace

CheckResult check_sandwich(const GroupAlgebra& alg, const TruncatedAlgebra& V, int k, int N, int first_samples,
                           int second_samples, Rng& rng) {
  const auto& cfg = alg.config();
  const Fq& F = alg.field();
  const int T = V.cutoff();
  const int f = cfg.f;
  const auto q = static_cast<int>(cfg.p_pow(N));
  require(k >= 0, ErrorKind::ConfigError, "k must be non-negative");
  require(k * q <= T, ErrorKind::CutoffBeyondFaithful,
          "k p^N = " + std::to_string(k * q) + " exceeds the cutoff " + std::to_string(T));
  CheckResult res;
  res.name = "sandwich_k" + std::to_string(k);
  res.data["k"] = k;
  res.data["cutoff"] = T;

  // First inclusion: sums of z^{p^N y} r with w(y) >= k have nu >= k p^N.
  const MonomialSpace ys(cfg, T / q);
  std::vector<std::size_t> admissible;
  for (std::size_t i = ys.begin_of_weight(k); i < ys.size(); ++i) admissible.push_back(i);
  const auto& G = alg.group();
  int min_nu = T + 1;
  for (int s = 0; s < first_samples; ++s) {
    AlgebraElement x;
    const int parts = 1 + static_cast<int>(rng.below(2));
    for (int t = 0; t < parts; ++t) {
      Exponents y = ys.exponents(admissible[rng.below(admissible.size())]);
      for (auto& e : y) e *= q;
      AlgebraElement r;
      const int terms = 1 + static_cast<int>(rng.below(3));
      for (int u = 0; u < terms; ++u) alg.axpy(r, rng.nonzero_field_element(F), alg.basis_element(rng.below(G.order())));
      alg.axpy(x, 1, alg.mul(alg.monomial(y), r));
    }
    const auto v = nu_of(V.space(), expand_dense(alg, V.space(), x));
    if (v) min_nu = std::min(min_nu, *v);
    if (v && *v < k * q) res.fail("first inclusion: sample " + std::to_string(s) + " has nu " + std::to_string(*v));
  }
  res.data["first_inclusion"] = {{"samples", first_samples},
                                 {"min_nu", min_nu > T ? nlohmann::json("> " + std::to_string(T)) : nlohmann::json(min_nu)}};

  // Second inclusion: monomials of weight in [k p^N, T] rewritten through tau.
  TauRewriter rw(V, N);
  const auto& S = V.space();
  int max_iter = 0;
  std::size_t total_terms = 0;
  int verified = 0;
  for (int s = 0; s < second_samples; ++s) {
    // Weight first, then a monomial of that weight, so low weights are not
    // swamped by the many high-weight monomials.
    const int w = k * q + static_cast<int>(rng.below(T - k * q + 1));
    const std::size_t b = S.begin_of_weight(w);
    const Exponents x = S.exponents(b + rng.below(S.end_of_weight(w) - b));
    const SandwichTranscript t = rw.decompose(x);
    max_iter = std::max(max_iter, t.iterations);
    total_terms += t.terms.size();
    for (const auto& [m, c] : t.terms) {
      const int floor_w = monomial_weight(tau_split(m, q).floor_part, f);
      if (floor_w < (k - 4 * f) * q)
        res.fail("floor part of " + exps_to_string(m) + " has weight " + std::to_string(floor_w));
    }
    if (verify_transcript(alg, S, t, N))
      ++verified;
    else
      res.fail("transcript of " + exps_to_string(x) + " does not re-expand to the monomial");
  }
  res.data["second_inclusion"] = {{"monomials", second_samples},
                                  {"verified", verified},
                                  {"max_iterations", max_iter},
                                  {"tau_terms", total_terms},
                                  {"n_index", k - 4 * f}};
  int contract_fail = 0;
  for (const auto& [m, c] : rw.touched())
    if (!c.ok) {
      ++contract_fail;
      res.fail("tau contract fails at " + exps_to_string(S.exponents(m)));
    }
  res.data["tau_contract"] = {{"checked", rw.touched().size()}, {"failures", contract_fail}};
  res.detail = std::to_string(verified) + "/" + std::to_string(second_samples) + " transcripts verified, " +
               std::to_string(rw.touched().size()) + " tau contracts";
  return res;
}

CheckResult check_pigeonhole(const GradedRing& R, const IdealSpec& J, int N, int samples, Rng& rng) {
  const Fq& F = R.field();
  const auto& cfg = R.truncated().algebra().config();
  const int T = R.cutoff();
  const std::uint64_t q = cfg.p_pow(N);
  CheckResult res;
  res.name = "pigeonhole_" + J.name;

  const IdealSpec Jh = J.homogeneous() ? J : homogenize(J);
  const IdealSpecN JN = build_JN(Jh, F, cfg.p, N);
  const auto gens = Jh.generators();
  const std::size_t draws = gens.size() * q;
  int min_deg = T + 1;
  for (const auto& g : gens) min_deg = std::min(min_deg, poly_degree(g));
  require(static_cast<std::size_t>(min_deg) * draws <= static_cast<std::size_t>(T), ErrorKind::CutoffBeyondFaithful,
          "(f+n) p^N products of minimal degree exceed the cutoff");

  IdealSpec c_only;
  c_only.f = cfg.f;
  auto target_gens = JN.f_tilde;
  for (const auto& g : c_only.generators()) target_gens.push_back(g);
  const auto target = R.ideal_table(target_gens);
  const auto c_table = R.ideal_table(c_only.generators());

  int exact = 0, beyond = 0;
  for (int s = 0; s < samples; ++s) {
    std::vector<std::size_t> counts(gens.size(), 0);
    std::vector<std::size_t> seq(draws);
    for (auto& g : seq) ++counts[g = rng.below(gens.size())];
    if (*std::max_element(counts.begin(), counts.end()) < q) res.fail("pigeonhole violated in sample " + std::to_string(s));
    int deg = 0;
    for (auto g : seq) deg += poly_degree(gens[g]);
    if (deg > T) {
      ++beyond;
      continue;
    }
    GradedClass cur = R.one();
    for (auto g : seq) cur = R.mul_poly(cur, gens[g]);
    ++exact;
    if (!target[deg].contains(F, R.to_local(cur.coords, deg)))
      res.fail("product in sample " + std::to_string(s) + " is not in (f~) + c");
  }

  int frob_checked = 0;
  for (std::size_t i = 0; i < Jh.f_gens.size(); ++i) {
    const int d = poly_degree(Jh.f_gens[i]) * static_cast<int>(q);
    if (d > T) continue;
    GradedClass pw = R.one();
    for (std::uint64_t e = 0; e < q; ++e) pw = R.mul_poly(pw, Jh.f_gens[i]);
    const GradedClass ft = R.of_poly(JN.f_tilde[i]);
    ++frob_checked;
    if (!c_table[d].contains(F, R.to_local(vec_sub(F, pw.coords, ft.coords), d)))
      res.fail("f_" + std::to_string(i) + "^{p^N} differs from f~_" + std::to_string(i) + " modulo c");
  }

  const auto J_table = R.ideal_table(gens);
  const auto JN_table = R.ideal_table(JN.generators());
  if (!ideal_contained(JN_table, J_table, F)) res.fail("J_N is not contained in J through the cutoff");

  // The quotient by J is commutative: degree-one commutators lie in J.
  for (int i = 0; i < 2 * cfg.f; ++i)
    for (int j = i + 1; j < 2 * cfg.f; ++j)
      if (!J_table[2].contains(F, R.to_local(R.commutator(R.generator_class(i), R.generator_class(j)).coords, 2)))
        res.fail("[z_" + std::to_string(i) + ", z_" + std::to_string(j) + "] is not in J");

  res.data["draws"] = draws;
  res.data["samples"] = samples;
  res.data["products_checked"] = exact;
  res.data["products_beyond_cutoff"] = beyond;
  res.data["frobenius_checked"] = frob_checked;
  res.detail = std::to_string(exact) + " products checked exactly, " + std::to_string(beyond) + " beyond the cutoff";
  return res;
}

}  // namespace iwalab
