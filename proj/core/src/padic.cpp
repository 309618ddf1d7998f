#include "iwalab/padic.hpp"

#include "iwalab/config.hpp"
#include "iwalab/error.hpp"

namespace iwalab {

UnramifiedRing::UnramifiedRing(std::uint32_t p, int f, int precision)
    : p_(p), f_(f), k_(precision), q_(ipow(p, precision)), residue_(p, f) {
  require(f >= 1 && f <= kMaxDegree, ErrorKind::ConfigError, "unsupported degree f");
  require(precision >= 1, ErrorKind::ConfigError, "precision must be >= 1");
  const auto& m = residue_.modulus();
  phi_.assign(m.begin(), m.end());
}

std::uint64_t UnramifiedRing::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(q_);
  if (r < 0) r += static_cast<std::int64_t>(q_);
  return static_cast<std::uint64_t>(r);
}

UInt UnramifiedRing::from_int(std::int64_t v) const {
  UInt x;
  x.c[0] = reduce(v);
  return x;
}

UInt UnramifiedRing::naive_lift(Fq::Elem a) const {
  UInt x;
  const auto c = residue_.coords(a);
  for (int i = 0; i < f_; ++i) x.c[i] = c[i];
  return x;
}

Fq::Elem UnramifiedRing::residue(const UInt& x) const { return residue_.from_coords(x.c.data()); }

UInt UnramifiedRing::add(const UInt& x, const UInt& y) const {
  UInt r;
  for (int i = 0; i < f_; ++i) {
    const std::uint64_t s = x.c[i] + y.c[i];
    r.c[i] = s >= q_ ? s - q_ : s;
  }
  return r;
}

UInt UnramifiedRing::sub(const UInt& x, const UInt& y) const {
  UInt r;
  for (int i = 0; i < f_; ++i) r.c[i] = x.c[i] >= y.c[i] ? x.c[i] - y.c[i] : x.c[i] + q_ - y.c[i];
  return r;
}

UInt UnramifiedRing::neg(const UInt& x) const {
  UInt r;
  for (int i = 0; i < f_; ++i) r.c[i] = x.c[i] == 0 ? 0 : q_ - x.c[i];
  return r;
}

UInt UnramifiedRing::mul(const UInt& x, const UInt& y) const {
  if (f_ == 1) {
    UInt r;
    r.c[0] = (x.c[0] * y.c[0]) % q_;
    return r;
  }
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (int i = 0; i < f_; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < f_; ++j) prod[i + j] = (prod[i + j] + x.c[i] * y.c[j]) % q_;
  }
  for (int i = 2 * f_ - 2; i >= f_; --i) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    // x^f = -(phi_0 + ... + phi_{f-1} x^{f-1})
    for (int j = 0; j < f_; ++j) prod[i - f_ + j] = (prod[i - f_ + j] + (q_ - c) * phi_[j]) % q_;
  }
  UInt r;
  for (int i = 0; i < f_; ++i) r.c[i] = prod[i];
  return r;
}

UInt UnramifiedRing::scale(const UInt& x, std::int64_t s) const {
  const std::uint64_t t = reduce(s);
  UInt r;
  for (int i = 0; i < f_; ++i) r.c[i] = (x.c[i] * t) % q_;
  return r;
}

UInt UnramifiedRing::pow(const UInt& x, std::uint64_t e) const {
  UInt r = one();
  UInt b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool UnramifiedRing::is_unit(const UInt& x) const { return residue(x) != 0; }

UInt UnramifiedRing::inv(const UInt& x) const {
  const Fq::Elem r = residue(x);
  require(r != 0, ErrorKind::InputNotUnitOne, "element is not a unit");
  // Newton iteration y <- y (2 - x y) doubles the p-adic precision.
  UInt y = naive_lift(residue_.inv(r));
  const UInt two = from_int(2);
  for (int prec = 1; prec < k_; prec *= 2) y = mul(y, sub(two, mul(x, y)));
  return y;
}

int UnramifiedRing::valuation(const UInt& x) const {
  int v = k_;
  for (int i = 0; i < f_; ++i) {
    if (x.c[i] == 0) continue;
    int w = 0;
    std::uint64_t c = x.c[i];
    while (c % p_ == 0) {
      c /= p_;
      ++w;
    }
    if (w < v) v = w;
  }
  return v;
}

UInt UnramifiedRing::divide_p_power(const UInt& x, int v) const {
  const std::uint64_t d = ipow(p_, v);
  UInt r;
  for (int i = 0; i < f_; ++i) r.c[i] = x.c[i] / d;
  return r;
}

UInt UnramifiedRing::mul_p_power(const UInt& x, int v) const {
  if (v >= k_) return zero();
  const std::uint64_t d = ipow(p_, v);
  UInt r;
  for (int i = 0; i < f_; ++i) r.c[i] = (x.c[i] * d) % q_;
  return r;
}

UInt UnramifiedRing::truncate(const UInt& x, int level) const {
  if (level >= k_) return x;
  const std::uint64_t d = ipow(p_, level);
  UInt r;
  for (int i = 0; i < f_; ++i) r.c[i] = x.c[i] % d;
  return r;
}

UInt UnramifiedRing::teichmuller(Fq::Elem a) const {
  if (a == 0) return zero();
  const std::uint64_t pf = ipow(p_, f_);
  UInt x = naive_lift(a);
  // Each application of x -> x^{p^f} gains one p-adic digit.
  for (int i = 0; i <= k_; ++i) {
    UInt next = pow(x, pf);
    if (next == x) break;
    x = next;
  }
  return x;
}

UInt UnramifiedRing::hensel_sqrt(const UInt& u) const {
  require(residue(u) == 1, ErrorKind::InputNotUnitOne, "hensel_sqrt needs u = 1 mod p");
  // y -> y (3 - u y^2) / 2 converges to u^{-1/2}; then sqrt(u) = u * y.
  UInt y = one();
  const UInt three = from_int(3);
  const UInt half = inv(from_int(2));
  for (int prec = 1; prec < k_; prec *= 2) y = mul(mul(y, sub(three, mul(u, mul(y, y)))), half);
  return mul(u, y);
}

QuadExtRing::QuadExtRing(std::uint32_t p, int f, int precision) : base_(p, f, precision) {
  const Fq& k = base_.residue_field();
  // Smallest non-square by code; exists since p is odd.
  delta_ = 0;
  for (Fq::Elem a = 1; a < k.order(); ++a) {
    if (k.pow(a, (k.order() - 1) / 2) != 1) {
      delta_ = a;
      break;
    }
  }
  require(delta_ != 0, ErrorKind::ConfigError, "no non-square found");
  d_ = base_.teichmuller(delta_);
}

QInt QuadExtRing::add(const QInt& x, const QInt& y) const { return {base_.add(x.u, y.u), base_.add(x.v, y.v)}; }
QInt QuadExtRing::sub(const QInt& x, const QInt& y) const { return {base_.sub(x.u, y.u), base_.sub(x.v, y.v)}; }
QInt QuadExtRing::neg(const QInt& x) const { return {base_.neg(x.u), base_.neg(x.v)}; }

QInt QuadExtRing::mul(const QInt& x, const QInt& y) const {
  const UInt uu = base_.mul(x.u, y.u);
  const UInt vv = base_.mul(x.v, y.v);
  const UInt uv = base_.add(base_.mul(x.u, y.v), base_.mul(x.v, y.u));
  return {base_.add(uu, base_.mul(d_, vv)), uv};
}

QInt QuadExtRing::scale(const QInt& x, const UInt& s) const { return {base_.mul(x.u, s), base_.mul(x.v, s)}; }

QInt QuadExtRing::pow(const QInt& x, std::uint64_t e) const {
  QInt r = one();
  QInt b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

UInt QuadExtRing::norm(const QInt& x) const {
  return base_.sub(base_.mul(x.u, x.u), base_.mul(d_, base_.mul(x.v, x.v)));
}

QInt QuadExtRing::inv(const QInt& x) const {
  const UInt n = base_.inv(norm(x));
  return scale(frobenius(x), n);
}

int QuadExtRing::valuation(const QInt& x) const {
  return std::min(base_.valuation(x.u), base_.valuation(x.v));
}

QInt QuadExtRing::truncate(const QInt& x, int level) const {
  return {base_.truncate(x.u, level), base_.truncate(x.v, level)};
}

QInt QuadExtRing::teichmuller(Fq::Elem u0, Fq::Elem v0) const {
  QInt x{base_.naive_lift(u0), base_.naive_lift(v0)};
  if (is_zero(x)) return x;
  const std::uint64_t p2f = ipow(p(), 2 * degree());
  for (int i = 0; i <= precision(); ++i) {
    QInt next = pow(x, p2f);
    if (next == x) break;
    x = next;
  }
  return x;
}

QuaternionRing::QuaternionRing(std::uint32_t p, int f, int precision) : quad_(p, f, precision) {}

QuaternionInt QuaternionRing::add(const QuaternionInt& x, const QuaternionInt& y) const {
  return {quad_.add(x.a, y.a), quad_.add(x.b, y.b)};
}

QuaternionInt QuaternionRing::sub(const QuaternionInt& x, const QuaternionInt& y) const {
  return {quad_.sub(x.a, y.a), quad_.sub(x.b, y.b)};
}

QuaternionInt QuaternionRing::mul(const QuaternionInt& x, const QuaternionInt& y) const {
  // (a + bPi)(a' + b'Pi) = a a' + p b b'^sigma + (a b' + b a'^sigma) Pi
  const UInt p_elt = base().from_int(p());
  const QInt a = quad_.add(quad_.mul(x.a, y.a), quad_.scale(quad_.mul(x.b, quad_.frobenius(y.b)), p_elt));
  const QInt b = quad_.add(quad_.mul(x.a, y.b), quad_.mul(x.b, quad_.frobenius(y.a)));
  return {a, b};
}

QuaternionInt QuaternionRing::scale(const QuaternionInt& x, const UInt& s) const {
  return {quad_.scale(x.a, s), quad_.scale(x.b, s)};
}

QuaternionInt QuaternionRing::pow(const QuaternionInt& x, std::uint64_t e) const {
  QuaternionInt r = one();
  QuaternionInt b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

UInt QuaternionRing::nrd(const QuaternionInt& x) const {
  const auto& k = base();
  return k.sub(quad_.norm(x.a), k.scale(quad_.norm(x.b), p()));
}

QuaternionInt QuaternionRing::conj(const QuaternionInt& x) const { return {quad_.frobenius(x.a), quad_.neg(x.b)}; }

QuaternionInt QuaternionRing::inv(const QuaternionInt& x) const {
  return scale(conj(x), base().inv(nrd(x)));
}

int QuaternionRing::twice_valuation(const QuaternionInt& x) const {
  return std::min(2 * quad_.valuation(x.a), 2 * quad_.valuation(x.b) + 1);
}

std::array<std::array<UInt, 4>, 4> QuaternionRing::left_regular_matrix(const QuaternionInt& x) const {
  const QInt s = quad_.zeta();
  const std::array<QuaternionInt, 4> basis = {one(), embed(s), pi(), mul(embed(s), pi())};
  std::array<std::array<UInt, 4>, 4> m{};
  for (int col = 0; col < 4; ++col) {
    const QuaternionInt y = mul(x, basis[col]);
    m[0][col] = y.a.u;
    m[1][col] = y.a.v;
    m[2][col] = y.b.u;
    m[3][col] = y.b.v;
  }
  return m;
}

namespace {
UInt det3(const UnramifiedRing& r, const std::array<std::array<UInt, 4>, 4>& m, int skip_row, int skip_col) {
  int rows[3], cols[3];
  for (int i = 0, a = 0, b = 0; i < 4; ++i) {
    if (i != skip_row) rows[a++] = i;
    if (i != skip_col) cols[b++] = i;
  }
  auto e = [&](int i, int j) { return m[rows[i]][cols[j]]; };
  UInt t1 = r.mul(e(0, 0), r.sub(r.mul(e(1, 1), e(2, 2)), r.mul(e(1, 2), e(2, 1))));
  UInt t2 = r.mul(e(0, 1), r.sub(r.mul(e(1, 0), e(2, 2)), r.mul(e(1, 2), e(2, 0))));
  UInt t3 = r.mul(e(0, 2), r.sub(r.mul(e(1, 0), e(2, 1)), r.mul(e(1, 1), e(2, 0))));
  return r.add(r.sub(t1, t2), t3);
}
}  // namespace

UInt det4(const UnramifiedRing& ring, const std::array<std::array<UInt, 4>, 4>& m) {
  UInt acc = ring.zero();
  for (int j = 0; j < 4; ++j) {
    const UInt term = ring.mul(m[0][j], det3(ring, m, 0, j));
    acc = (j % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
  }
  return acc;
}

}  // namespace iwalab
