#include <doctest.h>

#include "iwalab/algebra.hpp"
#include "iwalab/error.hpp"
#include "iwalab/expansion.hpp"
#include "iwalab/random.hpp"

using namespace iwalab;

namespace {
PrimeConfig cfg(GroupCase gc) { return PrimeConfig{5, 1, 2, 1, gc, 0}; }
Exponents e3(std::uint32_t a, std::uint32_t b, std::uint32_t c) { return {a, b, c}; }
}  // namespace

TEST_CASE("lucas binomials") {
  CHECK(lucas_binomial(10, 5, 5) == 2);   // C(10,5) = 252 = 2 mod 5
  CHECK(lucas_binomial(24, 7, 5) == 4);   // C(4,2) C(4,1) = 24
  CHECK(lucas_binomial(7, 3, 5) == 0);    // low digit 2 < 3
  CHECK(lucas_binomial(3, 0, 5) == 1);
}

TEST_CASE("group ring arithmetic") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    const auto& G = alg.group();
    const AlgebraElement za = alg.z(0), zb = alg.z(1);
    CHECK(alg.mul(za, alg.zero()).is_zero());
    // [z_a, z_b] = AB - BA
    const auto comm = alg.commutator(za, zb);
    const GroupIndex A = G.generator(0), B = G.generator(1);
    const auto expect = alg.sub(alg.basis_element(G.mul(A, B)), alg.basis_element(G.mul(B, A)));
    CHECK(comm == expect);
    CHECK(comm.terms.size() == 2);
    // (A - 1)^p = A^p - 1
    const auto zp = alg.pow(za, 5);
    CHECK(zp == alg.sub(alg.basis_element(G.pow(A, 5)), alg.one()));
    // z^k matches the product of the factors.
    CHECK(alg.monomial(e3(2, 1, 0)) == alg.mul(alg.mul(za, za), zb));
    CHECK(alg.monomial(e3(25, 0, 0)).is_zero());
  }
}

TEST_CASE("expansion and nu") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    const auto& G = alg.group();
    const int T = 10;
    auto single = [&](const MonomialExpansion& e, const Exponents& k) {
      return e.coeffs.size() == 1 && e.coeffs.begin()->first == k && e.coeffs.begin()->second == 1;
    };
    CHECK(single(expand(alg, alg.z(0), T), e3(1, 0, 0)));
    const auto c0 = expand(alg, alg.basis_element(G.generator(2)), T);
    CHECK(c0.coeffs.size() == 2);
    CHECK(c0.coeffs.at(e3(0, 0, 0)) == 1);
    CHECK(c0.coeffs.at(e3(0, 0, 1)) == 1);
    CHECK(single(expand(alg, alg.pow(alg.z(0), 5), T), e3(5, 0, 0)));

    CHECK(nu(alg, alg.z(2), T) == 2);
    CHECK(nu(alg, alg.mul(alg.z(0), alg.z(1)), T) == 2);
    CHECK(nu(alg, alg.commutator(alg.basis_element(G.generator(0)), alg.basis_element(G.generator(1))), T) == 2);
    CHECK(!nu(alg, alg.zero(), T).has_value());

    CHECK(m_power_member(alg, alg.z(2), 2, T));
    CHECK(!m_power_member(alg, alg.z(0), 2, T));
    CHECK(m_power_member(alg, alg.one(), 0, T));
    CHECK_THROWS_AS(expand(alg, alg.z(0), 25), Error);
  }
}

TEST_CASE("expansion is exact on random elements") {
  GroupAlgebra alg(cfg(GroupCase::GL2));
  const int T = 6;
  const MonomialSpace space(alg.config(), T);
  TruncatedAlgebra V(alg, T);
  Rng rng(2, "expand");
  for (int t = 0; t < 20; ++t) {
    AlgebraElement x;
    for (int s = 0; s < 4; ++s)
      alg.axpy(x, rng.field_element(alg.field()), alg.basis_element(rng.below(alg.group().order())));
    // Expanding, lifting and expanding again is the identity through T.
    const Vec v = V.expand(x);
    CHECK(V.expand(V.lift(v)) == v);
    // Multiplication commutes with truncation.
    const AlgebraElement y = alg.basis_element(rng.below(alg.group().order()));
    CHECK(V.mul(v, V.expand(y)) == V.expand(alg.mul(x, y)));
  }
}

TEST_CASE("filtration spans") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    GroupAlgebra alg(cfg(gc));
    TruncatedAlgebra V(alg, 8);
    const auto chain = m_adic_chain(V, 8);
    CHECK(chain[0].dim() - chain[1].dim() == 1);
    CHECK(chain[1].dim() - chain[2].dim() == 2);  // 2f
    CHECK(chain[2].dim() - chain[3].dim() == 4);  // a^2, ab, b^2, c
    for (int j = 0; j <= 8; ++j) CHECK(chain[j] == V.weight_at_least(j));
    // n_0 at degree 0 is spanned by the scalars.
    const Subspace n0 = span_of_filtration(V, {FiltrationKind::N_RES, 0}, 1);
    CHECK(n0.contains(V.field(), V.unit(0)));
    const Subspace n1 = span_of_filtration(V, {FiltrationKind::N_RES, 1}, 1);
    CHECK(!n1.contains(V.field(), V.unit(0)));
    CHECK(n1.contains(V.field(), V.monomial(e3(5, 0, 0))));
  }
}
