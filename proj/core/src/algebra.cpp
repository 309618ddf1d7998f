#include "iwalab/algebra.hpp"

#include "iwalab/error.hpp"

namespace iwalab {

std::uint32_t lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  std::uint64_t r = 1;
  while (k > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    // small binomial nd choose kd mod p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < kd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    std::uint64_t inv = 1, b = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    r = r * num % p * inv % p;
    n /= p;
    k /= p;
  }
  return static_cast<std::uint32_t>(r);
}

GroupAlgebra::GroupAlgebra(const PrimeConfig& cfg) : group_(cfg), field_(cfg.p, cfg.f) {}

AlgebraElement GroupAlgebra::basis_element(GroupIndex g, Fq::Elem c) const {
  AlgebraElement x;
  if (c != 0) x.terms.emplace(g, c);
  return x;
}

AlgebraElement GroupAlgebra::z(int i) const {
  require(i >= 0 && i < group_.rank(), ErrorKind::ConfigMismatch, "generator index out of range");
  AlgebraElement x;
  x.terms.emplace(0, field_.neg(1));
  x.terms.emplace(group_.generator(i), 1);
  return x;
}

void GroupAlgebra::axpy(AlgebraElement& x, Fq::Elem s, const AlgebraElement& y) const {
  if (s == 0) return;
  for (const auto& [g, c] : y.terms) {
    const Fq::Elem v = field_.mul(s, c);
    auto [it, fresh] = x.terms.emplace(g, v);
    if (!fresh) {
      it->second = field_.add(it->second, v);
      if (it->second == 0) x.terms.erase(it);
    }
  }
}

AlgebraElement GroupAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement r = x;
  axpy(r, 1, y);
  return r;
}

AlgebraElement GroupAlgebra::sub(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement r = x;
  axpy(r, field_.neg(1), y);
  return r;
}

AlgebraElement GroupAlgebra::neg(const AlgebraElement& x) const { return scale(x, field_.neg(1)); }

AlgebraElement GroupAlgebra::scale(const AlgebraElement& x, Fq::Elem s) const {
  AlgebraElement r;
  if (s == 0) return r;
  for (const auto& [g, c] : x.terms) r.terms.emplace(g, field_.mul(s, c));
  return r;
}

AlgebraElement GroupAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement r;
  for (const auto& [g, c] : x.terms)
    for (const auto& [h, d] : y.terms) {
      const GroupIndex gh = group_.mul(g, h);
      const Fq::Elem v = field_.mul(c, d);
      auto [it, fresh] = r.terms.emplace(gh, v);
      if (!fresh) it->second = field_.add(it->second, v);
    }
  std::erase_if(r.terms, [](const auto& kv) { return kv.second == 0; });
  return r;
}

AlgebraElement GroupAlgebra::pow(const AlgebraElement& x, std::uint64_t e) const {
  AlgebraElement r = one();
  AlgebraElement b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

AlgebraElement GroupAlgebra::commutator(const AlgebraElement& x, const AlgebraElement& y) const {
  return sub(mul(x, y), mul(y, x));
}

AlgebraElement GroupAlgebra::monomial(const std::vector<std::uint32_t>& k) const {
  const int n = group_.rank();
  require(static_cast<int>(k.size()) == n, ErrorKind::ConfigMismatch, "exponent vector has wrong length");
  const std::uint32_t p = config().p;
  const std::uint64_t m = group_.digit_modulus();
  // (g-1)^e = 0 once e >= p^M since g^{p^M} = 1.
  for (auto e : k)
    if (e >= m) return {};
  // Expand each factor: (g_i - 1)^{k_i} = sum_j (-1)^{k_i-j} C(k_i, j) g_i^j.
  // Since digits index elements directly, the ordered product of the powers
  // is the element with digit vector j.
  std::vector<std::vector<std::pair<std::uint32_t, Fq::Elem>>> factors(n);
  for (int i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j <= k[i]; ++j) {
      const std::uint32_t b = lucas_binomial(k[i], j, p);
      if (b == 0) continue;
      Fq::Elem c = field_.from_int(b);
      if ((k[i] - j) % 2 == 1) c = field_.neg(c);
      factors[i].emplace_back(j, c);
    }
  AlgebraElement r;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    GroupIndex idx = 0;
    Fq::Elem c = 1;
    for (int i = n - 1; i >= 0; --i) {
      idx = idx * m + factors[i][pos[i]].first;
      c = field_.mul(c, factors[i][pos[i]].second);
    }
    r.terms.emplace(idx, c);
    int i = 0;
    while (i < n && ++pos[i] == factors[i].size()) pos[i++] = 0;
    if (i == n) break;
  }
  return r;
}

bool GroupAlgebra::supported_on_subgroup(const AlgebraElement& x, int N) const {
  for (const auto& [g, c] : x.terms)
    if (!group_.model().in_subgroup(group_.digits(g), N)) return false;
  return true;
}

}  // namespace iwalab
