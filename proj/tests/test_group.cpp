#include <doctest.h>

#include <unordered_set>

#include "iwalab/error.hpp"
#include "iwalab/group.hpp"
#include "iwalab/random.hpp"

using namespace iwalab;

namespace {
PrimeConfig cfg(GroupCase gc, int M = 2, int f = 1) { return PrimeConfig{5, f, M, M > 1 ? 1 : 0, gc, 0}; }
}  // namespace

TEST_CASE("multiplication and inverses") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    const QuotientGroup G(cfg(gc));
    const auto& m = G.model();
    const auto& A0 = m.basis()[0];
    CHECK(m.multiply(A0, m.invert(A0)) == m.identity());
    Rng rng(1, "mul");
    for (int t = 0; t < 50; ++t) {
      const GroupIndex a = rng.below(G.order()), b = rng.below(G.order()), c = rng.below(G.order());
      CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
      CHECK(G.mul(a, G.inv(a)) == G.identity());
      CHECK(m.is_canonical(G.element(G.mul(a, b))));
    }
  }
}

TEST_CASE("GL2: B_0 A_0 and its digits") {
  const QuotientGroup G(cfg(GroupCase::GL2));
  const auto& m = G.model();
  const GroupElement ba = m.multiply(m.basis()[1], m.basis()[0]);
  CHECK(ba.e[0].c[0] == 1);
  CHECK(ba.e[1].c[0] == 1);
  CHECK(ba.e[2].c[0] == 5);
  CHECK(ba.e[3].c[0] == 6);
  const DigitVector d = m.decompose(ba);
  CHECK(d.x == std::vector<std::uint64_t>{21, 6, 24});
  CHECK(m.compose(d) == ba);
}

TEST_CASE("normalisation modulo the centre") {
  SUBCASE("gl2") {
    const Gl2Model m(cfg(GroupCase::GL2));
    const auto& R = m.ring();
    // A central scalar maps to the identity.
    CHECK(m.normalize_mod_center({R.from_int(6), R.zero(), R.zero(), R.from_int(6)}) == m.identity());
    const GroupElement ba = m.multiply(m.basis()[1], m.basis()[0]);
    CHECK(m.normalize_mod_center(ba.e) == ba);
    CHECK_THROWS_AS(m.normalize_mod_center({R.from_int(2), R.zero(), R.zero(), R.one()}), Error);
  }
  SUBCASE("quat") {
    const QuatModel m(cfg(GroupCase::QUAT));
    const QuaternionRing& D = m.quaternions();
    const auto raw = D.add(D.one(), D.pi());
    CHECK(D.nrd(raw).c[0] % 25 == 21);
    CHECK(m.retraction(raw).c[0] % 25 == 11);
    const GroupElement g = m.normalize_mod_center(raw);
    CHECK(m.is_canonical(g));
    // g * 11 = 1 + Pi in the truncation.
    const auto back = D.scale(m.to_quaternion(g), D.base().from_int(11));
    CHECK(m.normalize_mod_center(back) == g);
    const auto scalar = D.embed(D.quad().embed(D.base().from_int(6)));
    CHECK(m.normalize_mod_center(scalar) == m.identity());
  }
}

TEST_CASE("digit decomposition round trips") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT})
    for (int f = 1; f <= 2; ++f)
      for (int M = 1; M <= (f == 1 ? 3 : 2); ++M) {
        const QuotientGroup G(cfg(gc, M, f));
        const auto& m = G.model();
        CHECK(m.decompose(m.identity()).is_zero());
        for (int i = 0; i < G.rank(); ++i) {
          DigitVector e;
          e.x.assign(G.rank(), 0);
          e.x[i] = 1;
          CHECK(m.decompose(m.basis()[i]) == e);
        }
        Rng rng(M * 10 + f, "digits");
        for (int t = 0; t < 40; ++t) {
          DigitVector d;
          for (int i = 0; i < G.rank(); ++i) d.x.push_back(rng.below(G.digit_modulus()));
          const GroupElement g = m.compose(d);
          CHECK(m.decompose(g) == d);
          CHECK(m.decompose_by_refinement(g) == d);
        }
      }
}

TEST_CASE("omega values") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    const QuotientGroup G(cfg(gc, 3));
    const auto& m = G.model();
    CHECK(m.omega(m.basis()[0]).twice == 1);
    CHECK(m.omega(m.basis()[2]).twice == 2);
    CHECK(m.omega(m.power(m.basis()[0], 5)).twice == 3);
    CHECK(m.omega(m.identity()).infinite);
    // The entry-based level agrees with the digit formula.
    Rng rng(4, "omega");
    for (int t = 0; t < 50; ++t) {
      const GroupIndex g = 1 + rng.below(G.order() - 1);
      CHECK(std::min(m.twice_level(G.element(g)), 2 * 3 + 1) == m.omega(G.element(g)).twice);
    }
  }
}

TEST_CASE("subgroup G^{p^N}") {
  for (GroupCase gc : {GroupCase::GL2, GroupCase::QUAT}) {
    const QuotientGroup G(cfg(gc));
    const auto& m = G.model();
    const OrderedBasis b0 = m.subgroup_basis(0);
    CHECK(b0.generators == m.basis());
    const OrderedBasis b1 = m.subgroup_basis(1);
    for (int i = 0; i < G.rank(); ++i) {
      DigitVector d;
      d.x.assign(G.rank(), 0);
      d.x[i] = 5;
      CHECK(m.decompose(b1.generators[i]) == d);
    }
    CHECK_THROWS_AS(m.subgroup_basis(2), Error);
    // Brute force: G^p is the set of p-th powers.
    std::unordered_set<GroupIndex> powers;
    for (GroupIndex g = 0; g < G.order(); ++g) powers.insert(G.pow(g, 5));
    Rng rng(9, "subgroup");
    int inside = 0;
    for (int t = 0; t < 200; ++t) {
      // Half of the samples are drawn from the subgroup.
      const GroupIndex g = t % 2 ? G.pow(rng.below(G.order()), 5) : rng.below(G.order());
      const bool member = m.in_subgroup(G.digits(g), 1);
      CHECK(member == (powers.count(g) == 1));
      inside += member;
    }
    CHECK(inside >= 100);
  }
}

TEST_CASE("quaternion commutator formula") {
  const auto r1 = check_quaternion_commutator_formula(5, 1);
  CHECK(r1.checked == 25);
  CHECK(r1.ok());
  const auto r2 = check_quaternion_commutator_formula(5, 2);
  CHECK(r2.ok());
}
