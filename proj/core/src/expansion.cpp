#include "iwalab/expansion.hpp"

#include <algorithm>
#include <functional>

#include "iwalab/error.hpp"

namespace iwalab {
namespace {

// Nonzero binomials C(d, k) mod p, k ascending, for every digit value d.
struct DominatedTable {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;
  DominatedTable(std::uint32_t p, std::uint64_t radix) : rows(radix) {
    for (std::uint64_t d = 0; d < radix; ++d)
      for (std::uint64_t k = 0; k <= d; ++k)
        if (auto b = lucas_binomial(d, k, p); b != 0) rows[d].emplace_back(static_cast<std::uint32_t>(k), b);
  }
};

const DominatedTable& dominated(std::uint32_t p, std::uint64_t radix) {
  static thread_local std::map<std::pair<std::uint32_t, std::uint64_t>, DominatedTable> cache;
  auto it = cache.find({p, radix});
  if (it == cache.end()) it = cache.emplace(std::make_pair(p, radix), DominatedTable(p, radix)).first;
  return it->second;
}

}  // namespace

int monomial_weight(const Exponents& k, int f) {
  int w = 0;
  for (std::size_t i = 0; i < k.size(); ++i) w += static_cast<int>(k[i]) * generator_weight(static_cast<int>(i), f);
  return w;
}

MonomialSpace::MonomialSpace(const PrimeConfig& cfg, int cutoff)
    : cutoff_(cutoff), rank_(cfg.rank()), f_(cfg.f), radix_(cfg.p_pow(cfg.M)) {
  require(cutoff >= 0, ErrorKind::CutoffBeyondFaithful, "negative cutoff");
  require(static_cast<std::uint64_t>(cutoff) < radix_, ErrorKind::CutoffBeyondFaithful,
          "cutoff " + std::to_string(cutoff) + " must stay below p^M = " + std::to_string(radix_));
  std::vector<Exponents> all;
  Exponents cur(rank_, 0);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == rank_) {
      all.push_back(cur);
      return;
    }
    const int w = generator_weight(i, f_);
    for (int e = 0; e * w <= budget; ++e) {
      cur[i] = e;
      rec(i + 1, budget - e * w);
    }
    cur[i] = 0;
  };
  rec(0, cutoff);
  std::sort(all.begin(), all.end(), [&](const Exponents& a, const Exponents& b) {
    const int wa = monomial_weight(a, f_), wb = monomial_weight(b, f_);
    return wa != wb ? wa < wb : a < b;
  });
  weight_begin_.assign(cutoff + 2, all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int w = monomial_weight(all[i], f_);
    if (i == 0 || weights_.back() != w)
      for (int v = (i == 0 ? 0 : weights_.back() + 1); v <= w; ++v) weight_begin_[v] = i;
    weights_.push_back(w);
    exps_.insert(exps_.end(), all[i].begin(), all[i].end());
    std::uint64_t key = 0;
    for (int c = rank_ - 1; c >= 0; --c) key = key * radix_ + all[i][c];
    index_.emplace(key, static_cast<std::uint32_t>(i));
  }
}

Exponents MonomialSpace::exponents(std::size_t i) const {
  return Exponents(exps_.begin() + i * rank_, exps_.begin() + (i + 1) * rank_);
}

std::size_t MonomialSpace::begin_of_weight(int w) const {
  if (w <= 0) return 0;
  if (w > cutoff_) return size();
  return weight_begin_[w];
}

std::optional<std::size_t> MonomialSpace::find(const Exponents& k) const {
  if (static_cast<int>(k.size()) != rank_) return std::nullopt;
  std::uint64_t key = 0;
  for (int c = rank_ - 1; c >= 0; --c) {
    if (k[c] >= radix_) return std::nullopt;
    key = key * radix_ + k[c];
  }
  return find_packed(key);
}

std::optional<std::size_t> MonomialSpace::find_packed(std::uint64_t key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vec expand_dense(const GroupAlgebra& alg, const MonomialSpace& space, const AlgebraElement& x) {
  const auto& cfg = alg.config();
  const Fq& F = alg.field();
  const auto& table = dominated(cfg.p, space.radix()).rows;
  const int n = space.rank();
  const int f = space.degree();
  std::vector<std::uint64_t> radix_pow(n, 1);
  for (int i = 1; i < n; ++i) radix_pow[i] = radix_pow[i - 1] * space.radix();

  Vec out(space.size(), 0);
  std::vector<std::uint64_t> digits(n);
  // Coefficient of z^k in g = prod (1 + z_i)^{x_i} is prod C(x_i, k_i).
  std::function<void(int, int, std::uint64_t, std::uint32_t, Fq::Elem)> rec =
      [&](int i, int budget, std::uint64_t key, std::uint32_t coeff, Fq::Elem c) {
        if (i == n) {
          auto idx = space.find_packed(key);
          if (idx) out[*idx] = F.add(out[*idx], F.mul(c, F.from_int(coeff)));
          return;
        }
        const int w = generator_weight(i, f);
        for (const auto& [k, b] : table[digits[i]]) {
          if (static_cast<int>(k) * w > budget) break;
          rec(i + 1, budget - static_cast<int>(k) * w, key + k * radix_pow[i], coeff * b % cfg.p, c);
        }
      };
  for (const auto& [g, c] : x.terms) {
    GroupIndex r = g;
    for (int i = 0; i < n; ++i) {
      digits[i] = r % space.radix();
      r /= space.radix();
    }
    rec(0, space.cutoff(), 0, 1, c);
  }
  return out;
}

MonomialExpansion to_expansion(const MonomialSpace& space, const Vec& v) {
  MonomialExpansion e;
  e.cutoff = space.cutoff();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) e.coeffs.emplace(space.exponents(i), v[i]);
  return e;
}

MonomialExpansion expand(const GroupAlgebra& alg, const AlgebraElement& x, int cutoff) {
  const MonomialSpace space(alg.config(), cutoff);
  return to_expansion(space, expand_dense(alg, space, x));
}

std::optional<int> nu_of(const MonomialSpace& space, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return space.weight(i);
  return std::nullopt;
}

std::optional<int> nu(const GroupAlgebra& alg, const AlgebraElement& x, int cutoff) {
  const MonomialSpace space(alg.config(), cutoff);
  return nu_of(space, expand_dense(alg, space, x));
}

std::string nu_to_string(const std::optional<int>& v, int cutoff) {
  return v ? std::to_string(*v) : "> " + std::to_string(cutoff);
}

bool m_power_member(const GroupAlgebra& alg, const AlgebraElement& x, int j, int cutoff) {
  require(j <= cutoff, ErrorKind::CutoffBeyondFaithful, "membership degree exceeds the cutoff");
  const auto v = nu(alg, x, cutoff);
  return !v || *v >= j;
}

// ---------------------------------------------------------------- TruncatedAlgebra

TruncatedAlgebra::TruncatedAlgebra(const GroupAlgebra& alg, int cutoff)
    : alg_(alg), space_(alg.config(), cutoff), left_(alg.config().rank()), right_(alg.config().rank()) {}

AlgebraElement TruncatedAlgebra::lift(const Vec& v) const {
  AlgebraElement r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) alg_.axpy(r, v[i], alg_.monomial(space_.exponents(i)));
  return r;
}

Vec TruncatedAlgebra::unit(std::size_t i) const {
  Vec v(dim(), 0);
  v[i] = 1;
  return v;
}

Vec TruncatedAlgebra::monomial(const Exponents& k) const {
  Vec v(dim(), 0);
  if (auto idx = space_.find(k)) v[*idx] = 1;
  return v;
}

SparseOp TruncatedAlgebra::build(int i, bool on_left) const {
  const auto& G = alg_.group();
  const Fq& F = field();
  const int n = space_.rank();
  const int wi = generator_weight(i, space_.degree());
  const GroupIndex gi = G.generator(i);
  SparseOp op(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Exponents k = space_.exponents(j);
    bool ordered = true;
    for (int m = on_left ? 0 : i + 1; m < (on_left ? i : n); ++m) ordered = ordered && k[m] == 0;
    if (ordered) {
      // z_i z^k (or z^k z_i) is again an ordered monomial.
      if (space_.weight(j) + wi > cutoff()) continue;
      ++k[i];
      if (auto idx = space_.find(k)) op.column(j).emplace_back(static_cast<std::uint32_t>(*idx), 1);
      continue;
    }
    const AlgebraElement y = alg_.monomial(k);
    AlgebraElement gy;
    for (const auto& [h, c] : y.terms) gy.terms.emplace(on_left ? G.mul(gi, h) : G.mul(h, gi), c);
    Vec col = expand(gy);
    col[j] = F.sub(col[j], 1);
    op.column(j) = to_sparse(col);
  }
  return op;
}

const SparseOp& TruncatedAlgebra::left(int i) const {
  if (!left_[i]) left_[i] = build(i, true);
  return *left_[i];
}

const SparseOp& TruncatedAlgebra::right(int i) const {
  if (!right_[i]) right_[i] = build(i, false);
  return *right_[i];
}

Vec TruncatedAlgebra::left_mul(int i, const Vec& v) const { return left(i).apply(field(), v); }
Vec TruncatedAlgebra::right_mul(int i, const Vec& v) const { return right(i).apply(field(), v); }

Vec TruncatedAlgebra::left_monomial(const Exponents& k, const Vec& v) const {
  Vec r = v;
  for (int i = space_.rank() - 1; i >= 0; --i)
    for (std::uint32_t e = 0; e < k[i]; ++e) {
      if (is_zero(r)) return r;
      r = left_mul(i, r);
    }
  return r;
}

Vec TruncatedAlgebra::right_monomial(const Vec& v, const Exponents& k) const {
  Vec r = v;
  for (int i = 0; i < space_.rank(); ++i)
    for (std::uint32_t e = 0; e < k[i]; ++e) {
      if (is_zero(r)) return r;
      r = right_mul(i, r);
    }
  return r;
}

Vec TruncatedAlgebra::mul(const Vec& x, const Vec& y) const {
  const Fq& F = field();
  Vec out(dim(), 0);
  const auto ny = nu(y);
  if (!ny) return out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    if (space_.weight(i) + *ny > cutoff()) break;
    vec_axpy(F, out, x[i], left_monomial(space_.exponents(i), y));
  }
  return out;
}

Vec TruncatedAlgebra::commutator(const Vec& x, const Vec& y) const {
  return vec_sub(field(), mul(x, y), mul(y, x));
}

Subspace TruncatedAlgebra::weight_at_least(int j) const {
  Subspace s(dim());
  for (std::size_t i = space_.begin_of_weight(j); i < dim(); ++i) s.insert(field(), unit(i));
  return s;
}

// ---------------------------------------------------------------- filtrations

std::string to_string(FiltrationKind k) {
  switch (k) {
    case FiltrationKind::M_ADIC: return "m_adic";
    case FiltrationKind::N_INT: return "n_int";
    case FiltrationKind::N_RES: return "n_res";
  }
  return "?";
}

std::vector<Subspace> m_adic_chain(const TruncatedAlgebra& V, int jmax) {
  const Fq& F = V.field();
  const int n = V.space().rank();
  std::vector<Subspace> chain{Subspace::full(V.dim())};
  for (int j = 1; j <= jmax; ++j) {
    Subspace next(V.dim());
    for (const auto& b : chain.back().basis())
      for (int i = 0; i < n; ++i) {
        next.insert(F, V.left_mul(i, b));
        next.insert(F, V.right_mul(i, b));
      }
    chain.push_back(std::move(next));
  }
  return chain;
}

Subspace span_of_filtration(const TruncatedAlgebra& V, FiltrationTag tag, int N) {
  const auto& cfg = V.algebra().config();
  const int T = V.cutoff();
  const std::uint64_t q = cfg.p_pow(N);
  switch (tag.kind) {
    case FiltrationKind::M_ADIC:
      require(tag.index >= 0 && tag.index <= T, ErrorKind::CutoffBeyondFaithful, "filtration index beyond cutoff");
      return m_adic_chain(V, tag.index).back();
    case FiltrationKind::N_INT:
      require(tag.index >= 0 && tag.index * static_cast<long>(q) <= T, ErrorKind::CutoffBeyondFaithful,
              "filtration index beyond cutoff");
      return m_adic_chain(V, tag.index * static_cast<int>(q)).back();
    case FiltrationKind::N_RES: break;
  }
  require(N >= 0 && N < cfg.M, ErrorKind::LevelTooDeep, "subgroup level must satisfy N < M");
  require(tag.index * static_cast<long>(q) <= T, ErrorKind::CutoffBeyondFaithful, "filtration index beyond cutoff");
  if (tag.index <= 0) return Subspace::full(V.dim());
  // n_j F[[G]] is spanned by z^{p^N y} z^k with w(y) >= j; dropping the last
  // factor of z^{p^N y} shows that w(y) in {j, j + 1} suffices.
  const Fq& F = V.field();
  const MonomialSpace ys(cfg, std::min<int>(T, tag.index + 1));
  Subspace out(V.dim());
  for (std::size_t yi = ys.begin_of_weight(tag.index); yi < ys.size(); ++yi) {
    Exponents y = ys.exponents(yi);
    for (auto& e : y) e *= static_cast<std::uint32_t>(q);
    const int wy = monomial_weight(y, cfg.f);
    if (wy > T) continue;
    for (std::size_t k = 0; k < V.space().begin_of_weight(T - wy + 1); ++k)
      out.insert(F, V.left_monomial(y, V.unit(k)));
  }
  return out;
}

}  // namespace iwalab
