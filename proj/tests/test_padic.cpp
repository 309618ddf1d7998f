#include <doctest.h>

#include "iwalab/config.hpp"
#include "iwalab/error.hpp"
#include "iwalab/fq.hpp"
#include "iwalab/padic.hpp"
#include "iwalab/random.hpp"

using namespace iwalab;

TEST_CASE("configuration validation") {
  PrimeConfig c;
  CHECK_NOTHROW(c.validate());
  c.p = 3;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.p = 9;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.N = 2;  // N >= M
  try {
    c.validate();
    FAIL("expected ConfigError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConfigError);
  }
  c = {};
  c.f = 5;
  CHECK_THROWS_AS(c.validate(), Error);
  c = {};
  c.M = 1;
  c.N = 0;
  CHECK_NOTHROW(c.validate());
  CHECK_THROWS_AS(c.validate_with_level(), Error);
}

TEST_CASE("finite field arithmetic") {
  for (int f = 1; f <= 3; ++f) {
    Fq F(5, f);
    CHECK(F.order() == ipow(5, f));
    Rng rng(11, "fq");
    for (int t = 0; t < 200; ++t) {
      const auto a = rng.nonzero_field_element(F);
      const auto b = rng.field_element(F);
      CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.sub(F.add(a, b), b) == a);
      CHECK(F.pow(a, F.order() - 1) == 1);
      CHECK(F.frobenius(a, f) == a);
      CHECK(F.from_coords(F.coords(b)) == b);
    }
  }
}

TEST_CASE("teichmueller lifts") {
  const UnramifiedRing R(5, 1, 2);
  const Fq& F = R.residue_field();
  CHECK(R.teichmuller(0) == R.zero());
  CHECK(R.teichmuller(1) == R.one());
  CHECK(R.teichmuller(F.from_int(2)).c[0] == 7);
  for (int f = 1; f <= 2; ++f) {
    const UnramifiedRing S(5, f, 3);
    const Fq& E = S.residue_field();
    for (Fq::Elem a = 1; a < E.order(); ++a) {
      const UInt t = S.teichmuller(a);
      CHECK(S.residue(t) == a);
      CHECK(S.pow(t, E.order() - 1) == S.one());
    }
  }
}

TEST_CASE("hensel square roots") {
  const UnramifiedRing R(5, 1, 2);
  CHECK(R.hensel_sqrt(R.one()) == R.one());
  CHECK(R.hensel_sqrt(R.from_int(6)).c[0] == 16);
  CHECK(R.hensel_sqrt(R.from_int(21)).c[0] == 11);
  CHECK_THROWS_AS(R.hensel_sqrt(R.from_int(2)), Error);
  const UnramifiedRing S(7, 2, 3);
  Rng rng(3, "sqrt");
  for (int t = 0; t < 100; ++t) {
    UInt u = S.one();
    for (int i = 0; i < 2; ++i) u.c[i] = (u.c[i] + 7 * rng.below(49)) % S.modulus();
    const UInt r = S.hensel_sqrt(u);
    CHECK(S.mul(r, r) == u);
    CHECK(S.residue(r) == 1);
  }
}

TEST_CASE("quadratic extension frobenius") {
  const QuadExtRing Q(5, 1, 3);
  CHECK(Q.frobenius(Q.one()) == Q.one());
  // sigma([zeta]) is the Teichmueller lift of zeta^{p^f} = -zeta.
  const Fq& F = Q.base().residue_field();
  const QInt z = Q.zeta();
  const QInt zp = Q.frobenius(z);
  CHECK(zp == Q.teichmuller(0, F.neg(1)));
  CHECK(Q.teichmuller(0, 1) == z);
  CHECK(Q.mul(zp, zp) == Q.mul(z, z));
  CHECK(Q.add(zp, z) == Q.zero());
  Rng rng(5, "quad");
  for (int t = 0; t < 100; ++t) {
    QInt x;
    x.u.c[0] = rng.below(Q.base().modulus());
    x.v.c[0] = rng.below(Q.base().modulus());
    CHECK(Q.frobenius(Q.frobenius(x)) == x);
    const UInt n = Q.norm(x);
    CHECK(Q.frobenius(Q.embed(n)) == Q.embed(n));
  }
}

TEST_CASE("quaternion order") {
  const QuaternionRing D(5, 1, 3);
  const auto one_pi = D.add(D.one(), D.pi());
  const auto one_mpi = D.sub(D.one(), D.pi());
  // (1 + Pi)(1 - Pi) = 1 - p
  const auto prod = D.mul(one_pi, one_mpi);
  CHECK(prod == D.embed(D.quad().embed(D.base().from_int(1 - 5))));
  CHECK(D.nrd(one_pi) == D.base().from_int(1 - 5));
  CHECK(D.mul(one_pi, D.inv(one_pi)) == D.one());
  // Pi x = sigma(x) Pi
  const auto z = D.embed(D.quad().zeta());
  CHECK(D.mul(D.pi(), z) == D.mul(D.embed(D.quad().frobenius(D.quad().zeta())), D.pi()));
  CHECK(det4(D.base(), D.left_regular_matrix(one_pi)) == D.base().mul(D.nrd(one_pi), D.nrd(one_pi)));
}
