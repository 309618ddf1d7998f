#include "iwalab/group.hpp"

#include <algorithm>

#include "iwalab/error.hpp"

namespace iwalab {
namespace {

int int_valuation(std::uint64_t x, std::uint32_t p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

// Inverse of an f x f matrix over Z/q, q = p^k, whose reduction mod p is
// invertible. Gauss-Jordan with unit pivots.
std::vector<std::vector<std::uint64_t>> invert_unit_matrix(std::vector<std::vector<std::uint64_t>> m,
                                                           const UnramifiedRing& ring) {
  const std::size_t n = m.size();
  const std::uint64_t q = ring.modulus();
  const std::uint32_t p = ring.p();
  auto inv_mod = [&](std::uint64_t a) {
    // a is a unit mod q: a^{-1} = a^{phi(q) - 1}
    std::uint64_t e = q / p * (p - 1) - 1, r = 1, b = a % q;
    while (e) {
      if (e & 1) r = r * b % q;
      b = b * b % q;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::vector<std::uint64_t>> inv(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] % p == 0) ++piv;
    require(piv < n, ErrorKind::ConfigError, "Teichmueller basis is not a basis");
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    const std::uint64_t s = inv_mod(m[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = m[c][j] * s % q;
      inv[c][j] = inv[c][j] * s % q;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const std::uint64_t t = q - m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] = (m[i][j] + t * m[c][j]) % q;
        inv[i][j] = (inv[i][j] + t * inv[c][j]) % q;
      }
    }
  }
  return inv;
}

std::vector<UInt> teichmuller_powers(const UnramifiedRing& ring) {
  const Fq& k = ring.residue_field();
  std::vector<UInt> out;
  for (int i = 0; i < ring.degree(); ++i) out.push_back(ring.teichmuller(k.pow(k.generator(), i)));
  return out;
}

}  // namespace

bool DigitVector::is_zero() const {
  return std::all_of(x.begin(), x.end(), [](std::uint64_t v) { return v == 0; });
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = static_cast<std::size_t>(g.kind) + 0x9e3779b97f4a7c15ULL;
  for (const auto& u : g.e)
    for (auto c : u.c) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Omega::to_string() const {
  if (infinite) return "inf";
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::unique_ptr<GroupModel> GroupModel::create(const PrimeConfig& cfg) {
  if (cfg.group == GroupCase::GL2) return std::make_unique<Gl2Model>(cfg);
  return std::make_unique<QuatModel>(cfg);
}

GroupModel::GroupModel(const PrimeConfig& cfg)
    : cfg_(cfg), ring_((cfg.validate(), cfg.p), cfg.f, cfg.M + 1), digit_mod_(cfg.p_pow(cfg.M)) {}

GroupElement GroupModel::identity() const {
  GroupElement g;
  g.kind = cfg_.group;
  g.e[0] = ring_.one();
  if (cfg_.group == GroupCase::GL2) g.e[3] = ring_.one();
  return g;
}

GroupElement GroupModel::power(const GroupElement& g, std::uint64_t e) const {
  GroupElement r = identity();
  GroupElement b = g;
  while (e) {
    if (e & 1) r = multiply(r, b);
    e >>= 1;
    if (e) b = multiply(b, b);
  }
  return r;
}

GroupElement GroupModel::commutator(const GroupElement& g, const GroupElement& h) const {
  return multiply(multiply(g, h), invert(multiply(h, g)));
}

OrderedBasis GroupModel::ordered_basis() const { return subgroup_basis(0); }

OrderedBasis GroupModel::subgroup_basis(int N) const {
  require(N >= 0, ErrorKind::LevelTooDeep, "negative subgroup level");
  require(N < cfg_.M, ErrorKind::LevelTooDeep,
          "G^{p^N} with N = " + std::to_string(N) + " is trivial at truncation M = " + std::to_string(cfg_.M));
  OrderedBasis out;
  out.level = N;
  const std::uint64_t e = cfg_.p_pow(N);
  for (int i = 0; i < cfg_.rank(); ++i) {
    out.generators.push_back(power(basis_[i], e));
    out.omegas.push_back(Omega{basis_twice_omega(i) + 2 * N, false});
  }
  return out;
}

bool GroupModel::in_subgroup(const DigitVector& d, int N) const {
  const std::uint64_t m = cfg_.p_pow(N);
  return std::all_of(d.x.begin(), d.x.end(), [m](std::uint64_t v) { return v % m == 0; });
}

GroupElement GroupModel::compose(const DigitVector& d) const {
  require(static_cast<int>(d.x.size()) == cfg_.rank(), ErrorKind::ConfigMismatch, "digit vector has wrong length");
  GroupElement g = identity();
  for (int i = 0; i < cfg_.rank(); ++i)
    if (d.x[i] % digit_mod_ != 0) g = multiply(g, power(basis_[i], d.x[i] % digit_mod_));
  return g;
}

DigitVector GroupModel::decompose(const GroupElement& g) const { return decompose_by_refinement(g); }

DigitVector GroupModel::decompose_by_refinement(const GroupElement& g) const {
  require(is_canonical(g), ErrorKind::NotInGroup, "decompose needs a canonical representative");
  const int f = cfg_.f;
  DigitVector d{std::vector<std::uint64_t>(cfg_.rank(), 0)};
  const int top = 2 * cfg_.M + 1;
  for (int iter = 0; iter <= top + 1; ++iter) {
    const GroupElement r = multiply(invert(compose(d)), g);
    const int t = twice_level(r);
    if (t >= top) return d;
    const auto s = shadow(r, t);
    if (t % 2 == 1) {
      const std::uint64_t step = cfg_.p_pow((t - 1) / 2);
      for (int i = 0; i < 2 * f; ++i) d.x[i] = (d.x[i] + step * s[i]) % digit_mod_;
    } else {
      const std::uint64_t step = cfg_.p_pow(t / 2 - 1);
      for (int i = 0; i < f; ++i) d.x[2 * f + i] = (d.x[2 * f + i] + step * s[i]) % digit_mod_;
    }
  }
  raise(ErrorKind::NonConvergent, "digit refinement did not terminate");
}

Omega GroupModel::omega_of_digits(const DigitVector& d, const PrimeConfig& cfg) {
  Omega best{0, true};
  for (int i = 0; i < cfg.rank(); ++i) {
    if (d.x[i] == 0) continue;
    const int tw = (i < 2 * cfg.f ? 1 : 2) + 2 * int_valuation(d.x[i], cfg.p, cfg.M);
    if (best.infinite || tw < best.twice) best = Omega{tw, false};
  }
  return best;
}

Omega GroupModel::omega(const GroupElement& g) const { return omega_of_digits(decompose(g), cfg_); }

// ---------------------------------------------------------------- GL2

Gl2Model::Gl2Model(const PrimeConfig& cfg) : GroupModel(cfg) {
  teich_ = teichmuller_powers(ring_);
  std::vector<std::vector<std::uint64_t>> t(cfg.f, std::vector<std::uint64_t>(cfg.f));
  for (int i = 0; i < cfg.f; ++i)
    for (int j = 0; j < cfg.f; ++j) t[j][i] = teich_[i].c[j];
  teich_inverse_ = invert_unit_matrix(t, ring_);

  std::vector<GroupElement> basis;
  const UInt one = ring_.one();
  for (int i = 0; i < cfg.f; ++i) {
    GroupElement a = identity();
    a.e[1] = ring_.truncate(teich_[i], cfg.M);
    basis.push_back(a);
  }
  for (int i = 0; i < cfg.f; ++i) {
    GroupElement b = identity();
    b.e[2] = ring_.mul_p_power(teich_[i], 1);
    basis.push_back(b);
  }
  for (int i = 0; i < cfg.f; ++i) {
    GroupElement c = identity();
    const UInt u = ring_.add(one, ring_.mul_p_power(teich_[i], 1));
    c.e[0] = u;
    c.e[3] = ring_.inv(u);
    basis.push_back(c);
  }
  set_basis(std::move(basis));
}

GroupElement Gl2Model::multiply(const GroupElement& g, const GroupElement& h) const {
  require(g.kind == GroupCase::GL2 && h.kind == GroupCase::GL2, ErrorKind::ConfigMismatch, "mixed group cases");
  const auto& r = ring_;
  GroupElement out;
  out.kind = GroupCase::GL2;
  out.e[0] = r.add(r.mul(g.e[0], h.e[0]), r.mul(g.e[1], h.e[2]));
  out.e[1] = r.truncate(r.add(r.mul(g.e[0], h.e[1]), r.mul(g.e[1], h.e[3])), cfg_.M);
  out.e[2] = r.add(r.mul(g.e[2], h.e[0]), r.mul(g.e[3], h.e[2]));
  out.e[3] = r.add(r.mul(g.e[2], h.e[1]), r.mul(g.e[3], h.e[3]));
  return out;
}

GroupElement Gl2Model::invert(const GroupElement& g) const {
  GroupElement out;
  out.kind = GroupCase::GL2;
  out.e[0] = g.e[3];
  out.e[1] = ring_.truncate(ring_.neg(g.e[1]), cfg_.M);
  out.e[2] = ring_.neg(g.e[2]);
  out.e[3] = g.e[0];
  return out;
}

bool Gl2Model::is_canonical(const GroupElement& g) const {
  if (g.kind != GroupCase::GL2) return false;
  const auto& r = ring_;
  if (r.residue(g.e[0]) != 1 || r.residue(g.e[3]) != 1) return false;
  if (r.valuation(g.e[2]) < 1) return false;
  if (!(r.truncate(g.e[1], cfg_.M) == g.e[1])) return false;
  const UInt det = r.sub(r.mul(g.e[0], g.e[3]), r.mul(g.e[1], g.e[2]));
  return det == r.one();
}

GroupElement Gl2Model::normalize_mod_center(const std::array<UInt, 4>& raw) const {
  const auto& r = ring_;
  require(r.residue(raw[0]) == 1 && r.residue(raw[3]) == 1, ErrorKind::NotInGroup,
          "diagonal entries must be 1 mod p");
  require(r.valuation(raw[2]) >= 1, ErrorKind::NotInGroup, "lower-left entry must be 0 mod p");
  const UInt det = r.sub(r.mul(raw[0], raw[3]), r.mul(raw[1], raw[2]));
  const UInt lambda = r.inv(r.hensel_sqrt(det));
  GroupElement g;
  g.kind = GroupCase::GL2;
  for (int i = 0; i < 4; ++i) g.e[i] = r.mul(raw[i], lambda);
  g.e[1] = r.truncate(g.e[1], cfg_.M);
  return g;
}

std::vector<std::uint64_t> Gl2Model::solve_teichmuller_coords(const UInt& y, int level) const {
  const std::uint64_t q = cfg_.p_pow(level);
  std::vector<std::uint64_t> x(cfg_.f, 0);
  for (int i = 0; i < cfg_.f; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < cfg_.f; ++j) acc = (acc + (teich_inverse_[i][j] % q) * (y.c[j] % q)) % q;
    x[i] = acc;
  }
  return x;
}

DigitVector Gl2Model::decompose(const GroupElement& g) const {
  require(is_canonical(g), ErrorKind::NotInGroup, "decompose needs a canonical representative");
  const auto& r = ring_;
  const int f = cfg_.f;
  const int M = cfg_.M;
  // g = (1 X; 0 1)(1 0; Y 1) diag(U, U^{-1}) with U = d^{-1}, X = b U, Y = c d.
  const UInt U = r.inv(g.e[3]);
  const UInt X = r.truncate(r.mul(g.e[1], U), M);
  const UInt Y = r.mul(g.e[2], g.e[3]);
  DigitVector d{std::vector<std::uint64_t>(cfg_.rank(), 0)};
  const auto xa = solve_teichmuller_coords(X, M);
  const auto yb = solve_teichmuller_coords(r.divide_p_power(Y, 1), M);
  for (int i = 0; i < f; ++i) {
    d.x[i] = xa[i];
    d.x[f + i] = yb[i];
  }
  // U = prod (1 + [alpha^i] p)^{z_i}, solved one p-adic digit at a time.
  std::vector<UInt> cgen(f);
  for (int i = 0; i < f; ++i) cgen[i] = r.add(r.one(), r.mul_p_power(teich_[i], 1));
  std::vector<std::uint64_t> z(f, 0);
  for (int j = 1; j <= M; ++j) {
    UInt prod = r.one();
    for (int i = 0; i < f; ++i) prod = r.mul(prod, r.pow(cgen[i], z[i]));
    const UInt res = r.mul(U, r.inv(prod));
    const UInt t = r.divide_p_power(r.sub(res, r.one()), j);
    const std::uint64_t step = cfg_.p_pow(j - 1);
    const auto k = r.residue_field().coords(r.residue(t));
    for (int i = 0; i < f; ++i) z[i] = (z[i] + step * k[i]) % digit_mod_;
  }
  for (int i = 0; i < f; ++i) d.x[2 * f + i] = z[i];
  return d;
}

int Gl2Model::twice_level(const GroupElement& g) const {
  const auto& r = ring_;
  const int M = cfg_.M;
  const int vb = std::min(r.valuation(g.e[1]), M);
  const int vc = r.valuation(g.e[2]);
  const int va = std::min(r.valuation(r.sub(g.e[0], r.one())), r.valuation(r.sub(g.e[3], r.one())));
  return std::min({2 * vb + 1, 2 * vc - 1, 2 * va});
}

std::vector<std::uint64_t> Gl2Model::shadow(const GroupElement& g, int twice) const {
  const auto& r = ring_;
  const auto& k = r.residue_field();
  const int f = cfg_.f;
  auto coords_of = [&](const UInt& x, int v) {
    const auto c = k.coords(r.residue(r.divide_p_power(x, v)));
    return std::vector<std::uint64_t>(c.begin(), c.end());
  };
  if (twice % 2 == 1) {
    const int kk = (twice - 1) / 2;
    auto a = coords_of(g.e[1], kk);
    auto b = coords_of(g.e[2], kk + 1);
    a.insert(a.end(), b.begin(), b.end());
    a.resize(2 * f);
    return a;
  }
  auto c = coords_of(r.sub(g.e[0], r.one()), twice / 2);
  c.resize(f);
  return c;
}

// ---------------------------------------------------------------- QUAT

QuatModel::QuatModel(const PrimeConfig& cfg) : GroupModel(cfg), quat_(cfg.p, cfg.f, cfg.M + 1) {
  const auto& r = ring_;
  const auto teich = teichmuller_powers(r);
  std::vector<GroupElement> basis;
  for (int i = 0; i < cfg.f; ++i) {
    QuaternionInt a = quat_.one();
    a.b = {teich[i], r.zero()};
    basis.push_back(normalize_mod_center(a));
  }
  for (int i = 0; i < cfg.f; ++i) {
    QuaternionInt b = quat_.one();
    b.b = {r.zero(), teich[i]};
    basis.push_back(normalize_mod_center(b));
  }
  for (int i = 0; i < cfg.f; ++i) {
    QuaternionInt c = quat_.one();
    c.a = {r.one(), r.mul_p_power(teich[i], 1)};
    basis.push_back(normalize_mod_center(c));
  }
  set_basis(std::move(basis));
}

QuaternionInt QuatModel::to_quaternion(const GroupElement& g) const {
  return {{g.e[0], g.e[1]}, {g.e[2], g.e[3]}};
}

GroupElement QuatModel::from_quaternion(const QuaternionInt& q) const {
  GroupElement g;
  g.kind = GroupCase::QUAT;
  g.e[0] = q.a.u;
  g.e[1] = q.a.v;
  g.e[2] = ring_.truncate(q.b.u, cfg_.M);
  g.e[3] = ring_.truncate(q.b.v, cfg_.M);
  return g;
}

GroupElement QuatModel::multiply(const GroupElement& g, const GroupElement& h) const {
  require(g.kind == GroupCase::QUAT && h.kind == GroupCase::QUAT, ErrorKind::ConfigMismatch, "mixed group cases");
  return from_quaternion(quat_.mul(to_quaternion(g), to_quaternion(h)));
}

GroupElement QuatModel::invert(const GroupElement& g) const {
  // Reduced norm one, so the inverse is the conjugate.
  return from_quaternion(quat_.conj(to_quaternion(g)));
}

bool QuatModel::is_canonical(const GroupElement& g) const {
  if (g.kind != GroupCase::QUAT) return false;
  const auto& r = ring_;
  if (r.residue(g.e[0]) != 1 || r.residue(g.e[1]) != 0) return false;
  if (!(r.truncate(g.e[2], cfg_.M) == g.e[2]) || !(r.truncate(g.e[3], cfg_.M) == g.e[3])) return false;
  return quat_.nrd(to_quaternion(g)) == r.one();
}

UInt QuatModel::retraction(const QuaternionInt& raw) const { return ring_.hensel_sqrt(quat_.nrd(raw)); }

GroupElement QuatModel::normalize_mod_center(const QuaternionInt& raw) const {
  const auto& r = ring_;
  require(r.residue(raw.a.u) == 1 && r.residue(raw.a.v) == 0, ErrorKind::NotInGroup,
          "element is not in 1 + Pi O_D");
  const UInt lambda = r.inv(retraction(raw));
  return from_quaternion(quat_.scale(raw, lambda));
}

int QuatModel::twice_level(const GroupElement& g) const {
  const auto& K2 = quat_.quad();
  const QInt a1 = K2.sub({g.e[0], g.e[1]}, K2.one());
  const int vb = std::min(K2.valuation({g.e[2], g.e[3]}), cfg_.M);
  return std::min(2 * K2.valuation(a1), 2 * vb + 1);
}

std::vector<std::uint64_t> QuatModel::shadow(const GroupElement& g, int twice) const {
  const auto& r = ring_;
  const auto& k = r.residue_field();
  auto coords_of = [&](const UInt& x, int v) {
    const auto c = k.coords(r.residue(r.divide_p_power(x, v)));
    return std::vector<std::uint64_t>(c.begin(), c.end());
  };
  if (twice % 2 == 1) {
    const int kk = (twice - 1) / 2;
    auto u = coords_of(g.e[2], kk);
    auto v = coords_of(g.e[3], kk);
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }
  // Even level: the s-component of (a - 1)/p^k; the K-component is central.
  return coords_of(g.e[1], twice / 2);
}

// ---------------------------------------------------------------- QuotientGroup

QuotientGroup::QuotientGroup(const PrimeConfig& cfg)
    : cfg_(cfg), model_(GroupModel::create(cfg)), digit_mod_(cfg.p_pow(cfg.M)), order_(ipow(digit_mod_, cfg.rank())) {}

GroupIndex QuotientGroup::index(const DigitVector& d) const {
  GroupIndex idx = 0;
  for (int i = cfg_.rank() - 1; i >= 0; --i) idx = idx * digit_mod_ + d.x[i] % digit_mod_;
  return idx;
}

DigitVector QuotientGroup::digits(GroupIndex i) const {
  DigitVector d{std::vector<std::uint64_t>(cfg_.rank())};
  for (int k = 0; k < cfg_.rank(); ++k) {
    d.x[k] = i % digit_mod_;
    i /= digit_mod_;
  }
  return d;
}

std::uint64_t QuotientGroup::digit(GroupIndex i, int coord) const {
  for (int k = 0; k < coord; ++k) i /= digit_mod_;
  return i % digit_mod_;
}

GroupIndex QuotientGroup::generator(int i) const {
  GroupIndex idx = 1;
  for (int k = 0; k < i; ++k) idx *= digit_mod_;
  return idx;
}

const GroupElement& QuotientGroup::element(GroupIndex i) const {
  auto it = elements_.find(i);
  if (it != elements_.end()) return it->second;
  GroupElement g = model_->compose(digits(i));
  indices_.emplace(g, i);
  return elements_.emplace(i, g).first->second;
}

GroupIndex QuotientGroup::index_of(const GroupElement& g) const {
  auto it = indices_.find(g);
  if (it != indices_.end()) return it->second;
  const GroupIndex i = index(model_->decompose(g));
  indices_.emplace(g, i);
  elements_.emplace(i, g);
  return i;
}

GroupIndex QuotientGroup::mul(GroupIndex a, GroupIndex b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const GroupElement& ga = element(a);
  const GroupElement& gb = element(b);
  return index_of(model_->multiply(ga, gb));
}

GroupIndex QuotientGroup::inv(GroupIndex a) const { return index_of(model_->invert(element(a))); }

GroupIndex QuotientGroup::pow(GroupIndex a, std::uint64_t e) const {
  return index_of(model_->power(element(a), e));
}

// ---------------------------------------------------------------- commutator formula

CommutatorFormulaReport check_quaternion_commutator_formula(std::uint32_t p, int f) {
  CommutatorFormulaReport rep;
  const QuaternionRing D(p, f, 3);
  const auto& K = D.base();
  const auto& K2 = D.quad();
  // [zeta^{p^f}] from the residue field, independently of the Galois action.
  const QuadExtRing residue_ring(p, f, 1);
  const QInt zeta_pf = residue_ring.pow(residue_ring.zeta(), ipow(p, f));
  const QInt teich_pf = K2.teichmuller(residue_ring.base().residue(zeta_pf.u), residue_ring.base().residue(zeta_pf.v));
  const QInt zeta = K2.teichmuller(0, 1);

  const std::uint64_t q2 = ipow(p, 2);
  const std::uint64_t count = ipow(q2, f);
  const UInt p_elt = K.from_int(p);
  for (std::uint64_t code = 0; code < count; ++code) {
    UInt gamma;
    std::uint64_t c = code;
    for (int i = 0; i < f; ++i) {
      gamma.c[i] = c % q2;
      c /= q2;
    }
    QuaternionInt x = D.one();
    x.b = zeta;
    QuaternionInt y = D.one();
    y.b = K2.embed(gamma);
    const QuaternionInt comm = D.mul(D.mul(x, y), D.mul(D.inv(x), D.inv(y)));
    QuaternionInt rhs = D.one();
    rhs.a = K2.add(K2.one(), K2.scale(K2.scale(K2.sub(zeta, teich_pf), gamma), p_elt));
    // p Pi O_D = p^2 O_{K2} + p O_{K2} Pi.
    const QuaternionInt diff = D.sub(comm, rhs);
    const bool ok = K2.valuation(diff.a) >= 2 && K2.valuation(diff.b) >= 1;
    ++rep.checked;
    if (!ok) rep.failures.push_back("gamma code " + std::to_string(code));
  }
  return rep;
}

}  // namespace iwalab
