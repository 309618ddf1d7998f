#include <doctest.h>

#include "iwalab/error.hpp"
#include "iwalab/module.hpp"
#include "iwalab/random.hpp"

using namespace iwalab;

namespace {

PrimeConfig cfg(GroupCase gc, int M, int N = 1) { return PrimeConfig{5, 1, M, N, gc, 0}; }

// Smallest l with (rho(c) - 1)^l F_k inside F_{k+2l+1} for every k, straight
// from the m-chain; F_k = 0 past the end of the chain.
int c_exponent_oracle(const Fq& F, const FiniteModule& m, const GradedModule& gm) {
  const Matrix Y = mat_sub(F, m.gens[2], Matrix::identity(m.dim));
  const int K = static_cast<int>(gm.chain.size());
  auto level = [&](int k) { return k < K ? gm.chain[k] : Subspace(m.dim); };
  Matrix P = Matrix::identity(m.dim);
  for (int l = 1; l <= static_cast<int>(m.dim) + 1; ++l) {
    P = mat_mul(F, Y, P);
    bool ok = true;
    for (int k = 0; k < K && ok; ++k) ok = level(k + 2 * l + 1).contains(F, image(F, P, gm.chain[k]));
    if (ok) return l;
  }
  return -1;
}

std::size_t sum(const std::vector<std::size_t>& v) {
  std::size_t s = 0;
  for (auto x : v) s += x;
  return s;
}

}  // namespace

TEST_CASE("trivial module") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc, 2));
    const Fq& F = alg.field();
    const FiniteModule m = trivial_module(alg.config());
    Rng rng(1, "trivial");
    CHECK(check_multiplicativity(alg, m, rng).ok());
    const GradedModule gm = grade(F, m, GradingKind::GR, 1);
    CHECK(gm.piece_dims() == std::vector<std::size_t>{1});
    for (const auto& name : default_ideal_names()) {
      const ExponentProfile e = measure_exponents(F, m, default_ideal(name, F), 1);
      CHECK(e.gr_J.ell_min == 1);
      CHECK(e.gr_JN.ell_min == 1);
      CHECK(e.int_JN.ell_min == 1);
      CHECK(e.res_JN.ell_min == 1);
    }
  }
}

TEST_CASE("regular module at M = 1") {
  GroupAlgebra alg(cfg(GroupCase::GL2, 1, 0));
  const Fq& F = alg.field();
  const FiniteModule m = regular_module(alg);
  CHECK(m.dim == 125);
  Rng rng(2, "regular");
  const MultiplicativityReport rep = check_multiplicativity(alg, m, rng);
  CHECK(rep.ok());
  CHECK(rep.exhaustive);
  const GradedModule gm = grade(F, m, GradingKind::GR, 0);
  REQUIRE(gm.chain.size() > 1);
  CHECK(gm.chain[1].dim() == 124);
  CHECK(sum(gm.piece_dims()) == 125);
  CHECK(!gm.first_stall());

  const int oracle = c_exponent_oracle(F, m, gm);
  CHECK(oracle == 5);
  const auto ring = ring_operators(F, m);
  const auto ideal = ideal_operators(F, m, default_ideal("c", F));
  CHECK(min_annihilator_exponent(F, gm, ring, ideal, "c").ell_min == oracle);
}

TEST_CASE("quotients, duals and relation checks") {
  GroupAlgebra alg(cfg(GroupCase::QUAT, 1, 0));
  const Fq& F = alg.field();
  const FiniteModule reg = regular_module(alg);
  Rng rng(3, "quotient");
  const FiniteModule q = random_quotient(F, reg, rng, 20);
  CHECK(q.dim <= 20);
  CHECK(q.dim >= 1);
  const MultiplicativityReport rep = check_multiplicativity(alg, q, rng);
  CHECK(rep.exhaustive);
  CHECK(rep.ok());

  const FiniteModule d = dualize(F, q);
  CHECK(d.dim == q.dim);
  CHECK(check_multiplicativity(alg, d, rng).ok());
  CHECK(find_isomorphism(F, dualize(F, d), q, rng));

  const FiniteModule moved = change_basis(F, q, random_invertible(F, q.dim, rng));
  CHECK(find_isomorphism(F, moved, q, rng));
  CHECK(sum(grade(F, moved, GradingKind::GR, 0).piece_dims()) == q.dim);

  FiniteModule bad = trivial_module(alg.config());
  bad.gens[0](0, 0) = 2;
  CHECK(!check_multiplicativity(alg, bad, rng).ok());
  try {
    validate_module(alg, bad, rng);
    FAIL("expected RelationCheckFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RelationCheckFailed);
  }

  // Unipotent a and b that commute only up to a nontrivial c-free term.
  FiniteModule noncomm;
  noncomm.cfg = alg.config();
  noncomm.dim = 2;
  Matrix A = Matrix::identity(2), B = Matrix::identity(2);
  A(0, 1) = 1;
  B(1, 0) = 1;
  noncomm.gens = {A, B, Matrix::identity(2)};
  CHECK_THROWS_AS(validate_module(alg, noncomm, rng), Error);
}

TEST_CASE("gradings and exponents at M = 2") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc, 2));
    const Fq& F = alg.field();
    TruncatedAlgebra V(alg, 6);
    const FiniteModule m = truncated_regular_module(V);
    Rng rng(4, "m2");
    CHECK(check_multiplicativity(alg, m, rng, 500).ok());
    for (GradingKind k : {GradingKind::GR, GradingKind::N_INT, GradingKind::N_RES}) {
      const GradedModule gm = grade(F, m, k, 1);
      CHECK(sum(gm.piece_dims()) == m.dim);
      CHECK(!gm.first_stall());
    }
    // Both routes to the n-chain agree.
    const GradedModule by_rec = grade_res(F, restrict_module(F, m, 1));
    const GradedModule by_mono = grade_res_by_monomials(F, m, alg.group(), 1);
    CHECK(by_rec.chain == by_mono.chain);
    CHECK_THROWS_AS(restrict_module(F, m, 2), Error);

    for (const auto& name : default_ideal_names()) {
      const IdealSpec J = default_ideal(name, F);
      const CheckResult t = check_exponent_transfer(F, m, J, 1);
      CHECK_MESSAGE(t.passed(), t.data.dump());
      const CheckResult d = restriction_determinism(F, alg, m, J, 1, rng, 2);
      CHECK_MESSAGE(d.passed(), d.data.dump());
    }
  }
}

TEST_CASE("commutant twists keep the restriction") {
  GroupAlgebra alg(cfg(GroupCase::GL2, 2));
  const Fq& F = alg.field();
  TruncatedAlgebra V(alg, 5);
  const FiniteModule m = truncated_regular_module(V);
  const RestrictedModule r = restrict_module(F, m, 1);
  const auto comm = commutant(F, r.h);
  REQUIRE(!comm.empty());
  Rng rng(5, "twist");
  Matrix T(m.dim, m.dim);
  for (const Matrix& c : comm) T = mat_add(F, T, mat_scale(F, c, rng.field_element(F)));
  if (!inverse(F, T)) T = mat_add(F, T, Matrix::identity(m.dim));
  REQUIRE(inverse(F, T));
  const RestrictedModule r2 = restrict_module(F, change_basis(F, m, T), 1);
  CHECK(r2.h.size() == r.h.size());
  for (std::size_t j = 0; j < r.h.size(); ++j) CHECK(r2.h[j] == r.h[j]);
}

TEST_CASE("corpus") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc, 2));
    const auto corpus = module_corpus(alg, 11, 3, 20);
    CHECK(corpus.size() >= 4);
    Rng rng(6, "corpus");
    for (const FiniteModule& m : corpus) {
      CHECK(m.dim <= 20);
      CHECK(check_multiplicativity(alg, m, rng, 200).ok());
    }
    const auto again = module_corpus(alg, 11, 3, 20);
    REQUIRE(again.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) CHECK(again[i].gens == corpus[i].gens);
  }
}
