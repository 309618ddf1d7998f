#include <doctest.h>

#include "iwalab/error.hpp"
#include "iwalab/graded.hpp"
#include "iwalab/random.hpp"
#include "iwalab/tau.hpp"

using namespace iwalab;

namespace {
PrimeConfig cfg(GroupCase gc, int M = 2, int f = 1) { return PrimeConfig{5, f, M, 1, gc, 0}; }
Exponents e3(std::uint32_t a, std::uint32_t b, std::uint32_t c) { return {a, b, c}; }
bool is_zero_class(const GradedClass& x) { return x.is_zero(); }
}  // namespace

TEST_CASE("commutator classes") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    TruncatedAlgebra V(alg, 8);
    GradedRing R(V);
    CHECK(is_zero_class(commutator_class(R, R.a(0), R.a(0))));
    const GradedClass ab = commutator_class(R, R.a(0), R.b(0));
    CHECK(ab.degree == 2);
    CHECK(!is_zero_class(ab));
    // [a, b] is a nonzero multiple of c.
    Subspace c_span(V.dim());
    c_span.insert(V.field(), R.c(0).coords);
    CHECK(c_span.contains(V.field(), ab.coords));
    CHECK(is_zero_class(commutator_class(R, R.c(0), R.a(0))));
  }
}

TEST_CASE("power commutator identity and centrality") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    TruncatedAlgebra V(alg, 8);
    GradedRing R(V);
    CHECK(check_power_commutator_identity(R, 0, R.b(0), 1));
    CHECK(check_power_commutator_identity(R, 0, R.b(0), 2));
    CHECK(check_power_commutator_identity(R, 0, R.b(0), 5));
    CHECK(check_centrality(R, R.c(0)));
    CHECK(!check_centrality(R, R.a(0)));
    CHECK(check_centrality(R, R.pow(R.a(0), 5)));
    CHECK(check_centrality(R, R.pow(R.b(0), 5)));
  }
}

TEST_CASE("hilbert series") {
  CHECK(hilbert_oracle(1, 6, false) == std::vector<std::size_t>{1, 2, 4, 6, 9, 12, 16});
  CHECK(hilbert_oracle(1, 6, true) == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7});
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    CHECK(hilbert_dims(alg, 4, false) == std::vector<std::size_t>{1, 2, 4, 6, 9});
    CHECK(hilbert_dims(alg, 4, true) == std::vector<std::size_t>{1, 2, 3, 4, 5});
    TruncatedAlgebra V(alg, 8);
    GradedRing R(V);
    CHECK(check_regular_sequence(R).ok);
  }
  GroupAlgebra alg2(PrimeConfig{5, 2, 1, 0, GroupCase::GL2, 0});
  CHECK(hilbert_dims(alg2, 3, false) == hilbert_oracle(2, 3, false));
  CHECK(hilbert_dims(alg2, 3, true) == hilbert_oracle(2, 3, true));
}

TEST_CASE("ideals J and J_N") {
  Fq F(5, 2);
  const IdealSpec c = default_ideal("c", F);
  CHECK(c.f_gens.empty());
  const IdealSpecN cN = build_JN(c, F, 5, 1);
  CHECK(cN.f_tilde.empty());
  CHECK(cN.c_power == 5);

  const IdealSpec ac = default_ideal("a+c", F);
  const IdealSpecN acN = build_JN(ac, F, 5, 1);
  REQUIRE(acN.f_tilde.size() == 2);
  CHECK(acN.f_tilde[0][0].m == Exponents{5, 0});

  // Coefficients are twisted by Frobenius.
  IdealSpec tw{"twist", 2, {}};
  const Fq::Elem alpha = F.generator();
  tw.f_gens.push_back({GradedTerm{{1, 0}, {1, 0}, {0, 0}, alpha}});
  const IdealSpecN twN = build_JN(tw, F, 5, 1);
  CHECK(twN.f_tilde[0][0].coeff == F.pow(alpha, 5));
  CHECK(twN.f_tilde[0][0].coeff != alpha);
  CHECK(twN.f_tilde[0][0].n == Exponents{5, 0});

  IdealSpec mixed{"nonhom", 2, {}};
  mixed.f_gens.push_back({GradedTerm{{1, 0}, {0, 0}, {0, 0}, 1}, GradedTerm{{2, 0}, {0, 0}, {0, 0}, 1}});
  CHECK_THROWS_AS(build_JN(mixed, F, 5, 1), Error);
  CHECK(homogenize(mixed).homogeneous());

  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    TruncatedAlgebra V(alg, 12);
    GradedRing R(V);
    for (const auto& name : default_ideal_names()) {
      const IdealSpec J = default_ideal(name, alg.field());
      const IdealSpecN JN = build_JN(J, alg.field(), 5, 1);
      CHECK(ideal_contained(R.ideal_table(JN.generators()), R.ideal_table(J.generators()), alg.field()));
    }
  }
}

TEST_CASE("tau rewriting") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    // Exponents below p^N: tau is the identity.
    CHECK(tau_rewrite(alg, e3(2, 3, 1), 1) == alg.monomial(e3(2, 3, 1)));
    // (A-1)^2 (B-1)^6 -> (B-1)^5 (A-1)^2 (B-1)
    const auto t = tau_rewrite(alg, e3(2, 6, 0), 1);
    CHECK(t == alg.mul(alg.monomial(e3(0, 5, 0)), alg.monomial(e3(2, 1, 0))));
    TruncatedAlgebra V(alg, 12);
    const TauContract c = check_tau_contract(V, e3(2, 6, 0), 1);
    CHECK(c.nu_x == 8);
    CHECK(c.nu_tau == 8);
    CHECK((!c.nu_diff || *c.nu_diff >= 9));
    CHECK(c.ok);
    const TauSplit s = tau_split(e3(7, 12, 3), 5);
    CHECK(s.floor_part == e3(5, 10, 0));
    CHECK(s.frac_part == e3(2, 2, 3));
  }
}

TEST_CASE("sandwich at small k") {
  GroupAlgebra alg(cfg(GroupCase::GL2));
  TruncatedAlgebra V(alg, 16);
  Rng rng(5, "sandwich");
  for (int k = 0; k <= 2; ++k) {
    const CheckResult r = check_sandwich(alg, V, k, 1, 20, 10, rng);
    CHECK_MESSAGE(r.passed(), r.data.dump());
  }
  // z_1^{p^N} generates n_1 and has nu = p^N.
  CHECK(V.nu(V.monomial(e3(5, 0, 0))) == 5);
}

TEST_CASE("pigeonhole") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    TruncatedAlgebra V(alg, 16);
    GradedRing R(V);
    Rng rng(6, "pigeonhole");
    for (const auto& name : default_ideal_names()) {
      const CheckResult r = check_pigeonhole(R, default_ideal(name, alg.field()), 1, 5, rng);
      CHECK_MESSAGE(r.passed(), name << " " << r.data.dump());
    }
  }
}
