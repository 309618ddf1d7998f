#include "iwalab/fq.hpp"

#include <algorithm>

#include "iwalab/config.hpp"
#include "iwalab/error.hpp"

namespace iwalab {
namespace {

// Polynomials over F_p as coefficient vectors, constant term first.
using Poly = std::vector<std::uint32_t>;

Poly mulmod(const Poly& a, const Poly& b, const Poly& monic, std::uint32_t p) {
  const std::size_t f = monic.size() - 1;
  std::vector<std::uint64_t> prod(2 * f, 0);
  for (std::size_t i = 0; i < f; ++i)
    for (std::size_t j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  for (std::size_t i = 2 * f - 1; i >= f && i < 2 * f; --i) {
    std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < f; ++j) prod[i - f + j] = (prod[i - f + j] + (p - c) * monic[j]) % p;
  }
  Poly r(f);
  for (std::size_t i = 0; i < f; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& monic, std::uint32_t p) {
  Poly r(monic.size() - 1, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = mulmod(r, base, monic, p);
    base = mulmod(base, base, monic, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// The root x of `monic` has order exactly p^f - 1. A ring of order p^f that
// contains a unit of that order is a field, so this also proves irreducibility.
bool root_is_primitive(const Poly& monic, std::uint32_t p) {
  const int f = static_cast<int>(monic.size()) - 1;
  const std::uint64_t n = ipow(p, f) - 1;
  Poly x(f, 0);
  if (f == 1) {
    x[0] = (p - monic[0]) % p;
  } else {
    x[1] = 1;
  }
  Poly one(f, 0);
  one[0] = 1;
  if (powmod(x, n, monic, p) != one) return false;
  for (std::uint64_t r : prime_factors(n))
    if (powmod(x, n / r, monic, p) == one) return false;
  return true;
}

}  // namespace

std::vector<std::uint32_t> standard_modulus(std::uint32_t p, int f) {
  require(f >= 1, ErrorKind::ConfigError, "field degree must be positive");
  const std::uint64_t count = ipow(p, f);
  for (std::uint64_t code = 1; code < count; ++code) {
    Poly poly(f + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < f; ++i) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    poly[f] = 1;
    if (poly[0] == 0) continue;
    if (root_is_primitive(poly, p)) return poly;
  }
  raise(ErrorKind::ConfigError, "no primitive polynomial found");
}

Fq::Fq(std::uint32_t p, int f) : p_(p), f_(f), q_(static_cast<std::uint32_t>(ipow(p, f))) {
  require(q_ <= 65536, ErrorKind::ConfigError, "field too large for table arithmetic");
  modulus_ = standard_modulus(p, f);
  Poly x(f, 0);
  if (f == 1) {
    x[0] = (p - modulus_[0]) % p;
  } else {
    x[1] = 1;
  }
  auto encode = [&](const Poly& poly) {
    std::uint32_t code = 0;
    for (int i = f - 1; i >= 0; --i) code = code * p + poly[i];
    return code;
  };
  primitive_ = encode(x);
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Poly cur(f, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    const std::uint32_t code = encode(cur);
    exp_[i] = code;
    log_[code] = i;
    cur = mulmod(cur, x, modulus_, p);
  }
  if (q_ <= 625) {
    add_table_.resize(std::size_t(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t r = 0, scale = 1, aa = a, bb = b;
        for (int i = 0; i < f; ++i) {
          r += ((aa % p + bb % p) % p) * scale;
          aa /= p;
          bb /= p;
          scale *= p;
        }
        add_table_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(r);
      }
  }
}

Fq::Elem Fq::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Fq::Elem Fq::add(Elem a, Elem b) const {
  if (f_ == 1) {
    Elem r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
  Elem r = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Fq::Elem Fq::neg(Elem a) const {
  if (f_ == 1) return a == 0 ? 0 : p_ - a;
  Elem r = 0, scale = 1;
  for (int i = 0; i < f_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

Fq::Elem Fq::inv(Elem a) const {
  require(a != 0, ErrorKind::ConfigError, "inverse of zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fq::Elem Fq::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Fq::Elem Fq::frobenius(Elem a, int times) const {
  Elem r = a;
  for (int i = 0; i < times; ++i) r = pow(r, p_);
  return r;
}

std::vector<std::uint32_t> Fq::coords(Elem a) const {
  std::vector<std::uint32_t> c(f_);
  for (int i = 0; i < f_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Fq::Elem Fq::from_coords(const std::vector<std::uint32_t>& c) const {
  Elem r = 0;
  for (int i = f_ - 1; i >= 0; --i) r = r * p_ + (i < static_cast<int>(c.size()) ? c[i] % p_ : 0);
  return r;
}

Fq::Elem Fq::from_coords(const std::uint64_t* c) const {
  Elem r = 0;
  for (int i = f_ - 1; i >= 0; --i) r = r * p_ + static_cast<Elem>(c[i] % p_);
  return r;
}

}  // namespace iwalab
