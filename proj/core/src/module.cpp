#include "iwalab/module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "iwalab/error.hpp"
#include "iwalab/expansion.hpp"

namespace iwalab {

namespace {

Matrix minus_identity(const Fq& F, const Matrix& a) { return mat_sub(F, a, Matrix::identity(a.rows())); }

std::string describe_digits(const QuotientGroup& G, GroupIndex g) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < G.rank(); ++i) os << (i ? "," : "") << G.digit(g, i);
  os << ")";
  return os.str();
}

int generator_degree(const PrimeConfig& cfg, int i) { return i < 2 * cfg.f ? 1 : 2; }

// Ordered product of powers of the given operators: ops[0]^e[0] ops[1]^e[1] ...
Matrix ordered_product(const Fq& F, const std::vector<Matrix>& ops, const std::vector<std::uint64_t>& e,
                       std::size_t dim) {
  Matrix r = Matrix::identity(dim);
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (e[i]) r = mat_mul(F, r, mat_pow(F, ops[i], e[i]));
  return r;
}

// Lifts a graded polynomial to an operator. base holds the 3f operators in
// basis order; exponents are divided by `div` first.
Matrix lift_poly(const Fq& F, const GradedPoly& poly, const std::vector<Matrix>& base, int f, std::uint64_t div,
                 std::size_t dim) {
  Matrix acc(dim, dim);
  for (const GradedTerm& t : poly) {
    std::vector<std::uint64_t> e(3 * f, 0);
    for (int i = 0; i < f; ++i) {
      auto at = [i](const Exponents& v) -> std::uint64_t { return i < static_cast<int>(v.size()) ? v[i] : 0; };
      const std::uint64_t xs[3] = {at(t.m), at(t.n), at(t.l)};
      for (int kind = 0; kind < 3; ++kind) {
        require(xs[kind] % div == 0, ErrorKind::NonHomogeneousInput,
                "exponent not divisible by p^N in a J_N generator");
        e[kind * f + i] = xs[kind] / div;
      }
    }
    acc = mat_add(F, acc, mat_scale(F, ordered_product(F, base, e, dim), t.coeff));
  }
  return acc;
}

Subspace zero_space(std::size_t n) { return Subspace(n); }

}  // namespace

// --- action --------------------------------------------------------------

ModuleAction::ModuleAction(const FiniteModule& m, const QuotientGroup& G)
    : m_(m), G_(G), F_(m.cfg.p, m.cfg.f) {
  require(static_cast<int>(m.gens.size()) == G.rank(), ErrorKind::ConfigMismatch, "generator count");
  const std::uint64_t order = G.digit_modulus();
  powers_.resize(m.gens.size());
  for (std::size_t i = 0; i < m.gens.size(); ++i) {
    powers_[i].reserve(order + 1);
    powers_[i].push_back(Matrix::identity(m.dim));
    for (std::uint64_t e = 1; e <= order; ++e) powers_[i].push_back(mat_mul(F_, powers_[i].back(), m.gens[i]));
  }
}

Matrix ModuleAction::rho(GroupIndex g) const {
  Matrix r;
  bool first = true;
  for (int i = 0; i < G_.rank(); ++i) {
    const std::uint64_t x = G_.digit(g, i);
    if (x == 0) continue;
    r = first ? powers_[i][x] : mat_mul(F_, r, powers_[i][x]);
    first = false;
  }
  return first ? Matrix::identity(m_.dim) : r;
}

// --- construction --------------------------------------------------------

FiniteModule trivial_module(const PrimeConfig& cfg) {
  FiniteModule m{cfg, 1, {}, Provenance::Constructed, "trivial"};
  m.gens.assign(cfg.rank(), Matrix::identity(1));
  return m;
}

FiniteModule regular_module(const GroupAlgebra& alg, std::size_t max_dim) {
  const QuotientGroup& G = alg.group();
  require(G.order() <= max_dim, ErrorKind::BoundExceeded, "regular module too large: " + std::to_string(G.order()));
  const std::size_t n = G.order();
  FiniteModule m{alg.config(), n, {}, Provenance::Constructed, "regular"};
  for (int i = 0; i < G.rank(); ++i) {
    Matrix P(n, n);
    const GroupIndex gi = G.generator(i);
    for (GroupIndex h = 0; h < n; ++h) P(G.mul(gi, h), h) = 1;
    m.gens.push_back(std::move(P));
  }
  return m;
}

FiniteModule truncated_regular_module(const TruncatedAlgebra& V) {
  const std::size_t n = V.dim();
  FiniteModule m{V.algebra().config(), n, {}, Provenance::Constructed, "V_" + std::to_string(V.cutoff())};
  for (int i = 0; i < m.cfg.rank(); ++i) {
    Matrix P = Matrix::identity(n);
    const SparseOp& L = V.left(i);
    for (std::size_t j = 0; j < n; ++j)
      for (auto [r, c] : L.column(j)) P(r, j) = V.field().add(P(r, j), c);
    m.gens.push_back(std::move(P));
  }
  return m;
}

Subspace generated_submodule(const Fq& F, const FiniteModule& m, const std::vector<Vec>& seeds) {
  Subspace S(m.dim);
  std::vector<Vec> queue;
  for (const Vec& v : seeds)
    if (S.insert(F, v)) queue.push_back(v);
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (const Matrix& g : m.gens) {
      Vec w = mat_vec(F, g, v);
      if (S.insert(F, w)) queue.push_back(std::move(w));
    }
  }
  return S;
}

FiniteModule quotient_module(const Fq& F, const FiniteModule& m, const Subspace& S) {
  std::vector<std::size_t> free;
  {
    std::vector<bool> pivot(m.dim, false);
    for (std::size_t c : S.pivots()) pivot[c] = true;
    for (std::size_t c = 0; c < m.dim; ++c)
      if (!pivot[c]) free.push_back(c);
  }
  FiniteModule q{m.cfg, free.size(), {}, m.provenance, m.label + "/W"};
  for (const Matrix& g : m.gens) {
    Matrix P(free.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      Vec v = g.column(free[j]);
      S.reduce(F, v);
      for (std::size_t i = 0; i < free.size(); ++i) P(i, j) = v[free[i]];
    }
    q.gens.push_back(std::move(P));
  }
  return q;
}

FiniteModule random_quotient(const Fq& F, const FiniteModule& base, Rng& rng, std::size_t max_dim) {
  const GradedModule chain = grade(F, base, GradingKind::GR, 0);
  const std::size_t K = chain.chain.size() - 1;  // chain[K] = 0
  Subspace S(base.dim);
  std::vector<Vec> seeds;
  for (int attempt = 0; attempt < 400 && base.dim - S.dim() > max_dim; ++attempt) {
    if (K < 2) break;
    const std::size_t k = 1 + rng.below(K - 1);
    const auto& B = chain.chain[k].basis();
    Vec v(base.dim, 0);
    for (const Vec& b : B) vec_axpy(F, v, rng.field_element(F), b);
    if (is_zero(v)) continue;
    seeds.push_back(v);
    Subspace T = generated_submodule(F, base, seeds);
    if (base.dim - T.dim() < 2) {
      seeds.pop_back();
      continue;
    }
    S = std::move(T);
  }
  if (base.dim - S.dim() > max_dim) {
    // Fall back to the deepest chain step that fits.
    for (std::size_t k = 1; k <= K; ++k)
      if (base.dim - chain.chain[k].dim() <= max_dim) {
        S = chain.chain[k];
        break;
      }
  }
  return quotient_module(F, base, S);
}

FiniteModule change_basis(const Fq& F, const FiniteModule& m, const Matrix& P) {
  const auto Pinv = inverse(F, P);
  require(Pinv.has_value(), ErrorKind::ConfigError, "basis change is singular");
  FiniteModule r = m;
  for (Matrix& g : r.gens) g = mat_mul(F, *Pinv, mat_mul(F, g, P));
  return r;
}

FiniteModule dualize(const Fq& F, const FiniteModule& m) {
  FiniteModule d = m;
  d.label = m.label + "^v";
  for (Matrix& g : d.gens) {
    auto inv = inverse(F, g);
    require(inv.has_value(), ErrorKind::RelationCheckFailed, "generator matrix is singular");
    g = transpose(*inv);
  }
  return d;
}

Matrix random_invertible(const Fq& F, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix P(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) P(i, j) = rng.field_element(F);
    if (rank(F, P) == n) return P;
  }
}

// --- validity ------------------------------------------------------------

MultiplicativityReport check_multiplicativity(const GroupAlgebra& alg, const FiniteModule& m, Rng& rng,
                                              std::uint64_t samples) {
  const Fq& F = alg.field();
  const QuotientGroup& G = alg.group();
  MultiplicativityReport rep;
  require(m.cfg.p == alg.config().p && m.cfg.f == alg.config().f && m.cfg.M == alg.config().M,
          ErrorKind::ConfigMismatch, "module and algebra configurations differ");
  if (static_cast<int>(m.gens.size()) != G.rank()) {
    rep.witness = "expected " + std::to_string(G.rank()) + " generator matrices";
    return rep;
  }
  for (std::size_t i = 0; i < m.gens.size(); ++i) {
    if (m.gens[i].rows() != m.dim || m.gens[i].cols() != m.dim) {
      rep.witness = "generator " + std::to_string(i) + " has the wrong shape";
      return rep;
    }
    if (!(mat_pow(F, m.gens[i], G.digit_modulus()) == Matrix::identity(m.dim))) {
      rep.witness = "generator " + std::to_string(i) + " has order not dividing p^M";
      return rep;
    }
  }
  ModuleAction act(m, G);
  auto check_pair = [&](GroupIndex g, GroupIndex h, const Matrix& rg, const Matrix& rh) {
    ++rep.pairs;
    if (mat_mul(F, rg, rh) == act.rho(G.mul(g, h))) return true;
    rep.witness = "rho(g)rho(h) != rho(gh) for g=" + describe_digits(G, g) + " h=" + describe_digits(G, h);
    return false;
  };
  if (m.cfg.M == 1 && G.order() * G.order() * m.dim * m.dim * m.dim <= 4'000'000'000ULL) {
    rep.exhaustive = true;
    std::vector<Matrix> all;
    all.reserve(G.order());
    for (GroupIndex g = 0; g < G.order(); ++g) all.push_back(act.rho(g));
    for (GroupIndex g = 0; g < G.order(); ++g)
      for (GroupIndex h = 0; h < G.order(); ++h) {
        ++rep.pairs;
        if (!(mat_mul(F, all[g], all[h]) == all[G.mul(g, h)])) {
          rep.witness = "rho(g)rho(h) != rho(gh) for g=" + describe_digits(G, g) + " h=" + describe_digits(G, h);
          return rep;
        }
      }
    return rep;
  }
  if (m.cfg.M == 1) {
    // Too large for all pairs: every generator against every element, which
    // implies multiplicativity on all pairs by induction on word length.
    rep.exhaustive = true;
    for (int i = 0; i < G.rank(); ++i)
      for (GroupIndex h = 0; h < G.order(); ++h)
        if (!check_pair(G.generator(i), h, m.gens[i], act.rho(h))) return rep;
    return rep;
  }
  for (std::uint64_t s = 0; s < samples; ++s) {
    const GroupIndex g = rng.below(G.order()), h = rng.below(G.order());
    if (!check_pair(g, h, act.rho(g), act.rho(h))) return rep;
  }
  return rep;
}

void validate_module(const GroupAlgebra& alg, const FiniteModule& m, Rng& rng, std::uint64_t samples) {
  const auto rep = check_multiplicativity(alg, m, rng, samples);
  if (!rep.ok()) raise(ErrorKind::RelationCheckFailed, *rep.witness);
}

// --- maps ----------------------------------------------------------------

namespace {

// Kernel of X -> (X A_i - B_i X)_i for X of shape rows x cols.
std::vector<Matrix> intertwiners(const Fq& F, const std::vector<Matrix>& A, const std::vector<Matrix>& B,
                                 std::size_t rows, std::size_t cols) {
  const std::size_t n = rows * cols;
  Matrix E(A.size() * n, n);
  for (std::size_t g = 0; g < A.size(); ++g)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const std::size_t eq = g * n + r * cols + c;
        for (std::size_t k = 0; k < cols; ++k) E(eq, r * cols + k) = F.add(E(eq, r * cols + k), A[g](k, c));
        for (std::size_t k = 0; k < rows; ++k) E(eq, k * cols + c) = F.sub(E(eq, k * cols + c), B[g](r, k));
      }
  std::vector<Matrix> out;
  for (const Vec& v : kernel(F, E)) {
    Matrix X(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) X(r, c) = v[r * cols + c];
    out.push_back(std::move(X));
  }
  return out;
}

}  // namespace

std::vector<Matrix> equivariant_maps(const Fq& F, const FiniteModule& a, const FiniteModule& b) {
  require(a.gens.size() == b.gens.size(), ErrorKind::ConfigMismatch, "generator counts differ");
  return intertwiners(F, a.gens, b.gens, b.dim, a.dim);
}

std::vector<Matrix> commutant(const Fq& F, const std::vector<Matrix>& mats) {
  const std::size_t n = mats.empty() ? 0 : mats.front().rows();
  return intertwiners(F, mats, mats, n, n);
}

std::optional<Matrix> find_isomorphism(const Fq& F, const FiniteModule& a, const FiniteModule& b, Rng& rng,
                                       int attempts) {
  if (a.dim != b.dim) return std::nullopt;
  const auto maps = equivariant_maps(F, a, b);
  if (maps.empty()) return std::nullopt;
  for (int t = 0; t < attempts; ++t) {
    Matrix X(b.dim, a.dim);
    for (const Matrix& B : maps) X = mat_add(F, X, mat_scale(F, B, rng.field_element(F)));
    if (rank(F, X) == a.dim) return X;
  }
  return std::nullopt;
}

// --- gradings ------------------------------------------------------------

std::string to_string(GradingKind k) {
  switch (k) {
    case GradingKind::GR: return "gr";
    case GradingKind::N_INT: return "gr_int";
    case GradingKind::N_RES: return "gr_res";
  }
  return "?";
}

std::vector<std::size_t> GradedModule::piece_dims() const {
  std::vector<std::size_t> d;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) d.push_back(chain[k].dim() - chain[k + 1].dim());
  return d;
}

std::optional<int> GradedModule::first_stall() const {
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (chain[k].dim() > 0 && chain[k].dim() == chain[k + 1].dim()) return static_cast<int>(k);
  return std::nullopt;
}

RestrictedModule restrict_module(const Fq& F, const FiniteModule& m, int N) {
  require(N >= 1 && N < m.cfg.M, ErrorKind::LevelTooDeep, "restriction needs 1 <= N < M");
  RestrictedModule r{m.cfg, N, m.dim, {}};
  const std::uint64_t q = m.cfg.p_pow(N);
  for (const Matrix& g : m.gens) r.h.push_back(mat_pow(F, g, q));
  return r;
}

namespace {

GradedModule m_chain(const Fq& F, const FiniteModule& m) {
  GradedModule gm;
  std::vector<Matrix> Z;
  for (const Matrix& g : m.gens) Z.push_back(minus_identity(F, g));
  gm.chain.push_back(Subspace::full(m.dim));
  while (gm.chain.back().dim() > 0) {
    Subspace next(m.dim);
    for (const Matrix& z : Z) next.insert_all(F, image(F, z, gm.chain.back()));
    require(next.dim() < gm.chain.back().dim(), ErrorKind::RelationCheckFailed,
            "augmentation filtration does not reach zero (action is not unipotent)");
    gm.chain.push_back(std::move(next));
  }
  return gm;
}

}  // namespace

GradedModule grade(const Fq& F, const FiniteModule& m, GradingKind kind, int N) {
  if (kind == GradingKind::GR) return m_chain(F, m);
  require(N >= 1 && N < m.cfg.M, ErrorKind::LevelTooDeep, "gradings at level N need 1 <= N < M");
  if (kind == GradingKind::N_RES) return grade_res(F, restrict_module(F, m, N));
  const GradedModule full = m_chain(F, m);
  const std::size_t q = m.cfg.p_pow(N);
  GradedModule gm{GradingKind::N_INT, N, static_cast<int>(q), {}};
  for (std::size_t k = 0;; ++k) {
    if (k * q >= full.chain.size()) {
      gm.chain.push_back(zero_space(m.dim));
      break;
    }
    gm.chain.push_back(full.chain[k * q]);
    if (gm.chain.back().dim() == 0) break;
  }
  return gm;
}

GradedModule grade_res(const Fq& F, const RestrictedModule& r) {
  GradedModule gm{GradingKind::N_RES, r.N, static_cast<int>(r.cfg.p_pow(r.N)), {}};
  std::vector<Matrix> Y;
  for (const Matrix& h : r.h) Y.push_back(minus_identity(F, h));
  const Subspace full = Subspace::full(r.dim);
  auto at = [&](int k) -> const Subspace& { return k <= 0 ? full : gm.chain[k]; };
  gm.chain.push_back(full);
  for (int k = 1; gm.chain.back().dim() > 0; ++k) {
    Subspace next(r.dim);
    for (std::size_t j = 0; j < Y.size(); ++j)
      next.insert_all(F, image(F, Y[j], at(k - generator_degree(r.cfg, static_cast<int>(j)))));
    require(k <= static_cast<int>(2 * r.dim + 2), ErrorKind::RelationCheckFailed,
            "n-filtration does not reach zero (restricted action is not unipotent)");
    gm.chain.push_back(std::move(next));
  }
  return gm;
}

GradedModule grade_res_by_monomials(const Fq& F, const FiniteModule& m, const QuotientGroup& G, int N) {
  require(N >= 1 && N < m.cfg.M, ErrorKind::LevelTooDeep, "gradings at level N need 1 <= N < M");
  const std::uint64_t q = m.cfg.p_pow(N);
  ModuleAction act(m, G);
  std::vector<Matrix> Y;
  std::vector<int> nil;  // smallest e with Y^e = 0
  for (int j = 0; j < G.rank(); ++j) {
    Y.push_back(minus_identity(F, act.rho(G.pow(G.generator(j), q))));
    Matrix P = Matrix::identity(m.dim);
    int e = 0;
    while (!is_zero(P)) {
      P = mat_mul(F, Y[j], P);
      ++e;
      require(e <= static_cast<int>(m.dim) + 1, ErrorKind::RelationCheckFailed, "h_j - 1 is not nilpotent");
    }
    nil.push_back(e);
  }
  // Images of Y_0^{y_0} ... Y_{n-1}^{y_{n-1}}, bucketed by weight.
  std::map<int, Subspace> by_weight;
  std::function<void(int, const Matrix&, int)> walk = [&](int j, const Matrix& P, int w) {
    if (j < 0) {
      auto [it, fresh] = by_weight.try_emplace(w, m.dim);
      for (std::size_t c = 0; c < P.cols(); ++c) it->second.insert(F, P.column(c));
      return;
    }
    Matrix cur = P;
    for (int e = 0; e < nil[j]; ++e) {
      if (is_zero(cur)) break;
      walk(j - 1, cur, w + e * generator_degree(m.cfg, j));
      cur = mat_mul(F, Y[j], cur);
    }
  };
  walk(G.rank() - 1, Matrix::identity(m.dim), 0);
  const int top = by_weight.empty() ? 0 : by_weight.rbegin()->first;
  std::vector<Subspace> cum(top + 2, zero_space(m.dim));
  for (int k = top; k >= 0; --k) {
    cum[k] = cum[k + 1];
    if (auto it = by_weight.find(k); it != by_weight.end()) cum[k].insert_all(F, it->second);
  }
  GradedModule gm{GradingKind::N_RES, N, static_cast<int>(q), {}};
  for (const Subspace& s : cum) {
    gm.chain.push_back(s);
    if (s.dim() == 0) break;
  }
  return gm;
}

// --- annihilators --------------------------------------------------------

std::string AnnihilatorReport::to_string() const {
  return ell_min ? std::to_string(*ell_min) : "none <= " + std::to_string(bound);
}

AnnihilatorReport min_annihilator_exponent(const Fq& F, const GradedModule& gm,
                                           const std::vector<GradedOperator>& ring,
                                           const std::vector<GradedOperator>& ideal, const std::string& name) {
  const std::size_t dim = gm.chain.front().ambient();
  AnnihilatorReport rep{name, gm.kind, std::nullopt, static_cast<int>(dim) + 1};
  for (const auto& x : ideal)
    require(x.degree > 0, ErrorKind::ConfigError, "ideal generators must have positive degree");
  for (const auto& z : ring) require(z.degree > 0, ErrorKind::ConfigError, "ring generators must have positive degree");
  const int K = static_cast<int>(gm.chain.size()) - 1;  // chain[K] = 0
  auto Fk = [&](int k) -> const Subspace& { return gm.chain[std::min(k, K)]; };

  // S[k] is F_{k+1} plus the degree-k part of J^l gr M lifted to F_k.
  std::vector<Subspace> prev(gm.chain.begin(), gm.chain.begin() + K);
  for (int ell = 1; ell <= rep.bound; ++ell) {
    std::vector<Subspace> cur;
    bool killed = true;
    for (int k = 0; k < K; ++k) {
      Subspace S = Fk(k + 1);
      for (const auto& x : ideal)
        if (k - x.degree >= 0) S.insert_all(F, image(F, x.op, prev[k - x.degree]));
      for (const auto& z : ring)
        if (k - z.degree >= 0) S.insert_all(F, image(F, z.op, cur[k - z.degree]));
      if (S.dim() != Fk(k + 1).dim()) killed = false;
      cur.push_back(std::move(S));
    }
    if (killed) {
      rep.ell_min = ell;
      return rep;
    }
    prev = std::move(cur);
  }
  return rep;
}

std::vector<GradedOperator> ring_operators(const Fq& F, const FiniteModule& m) {
  std::vector<GradedOperator> ops;
  for (std::size_t i = 0; i < m.gens.size(); ++i)
    ops.push_back({minus_identity(F, m.gens[i]), generator_degree(m.cfg, static_cast<int>(i))});
  return ops;
}

std::vector<GradedOperator> ring_operators_N(const Fq& F, const RestrictedModule& r) {
  std::vector<GradedOperator> ops;
  for (std::size_t j = 0; j < r.h.size(); ++j)
    ops.push_back({minus_identity(F, r.h[j]), generator_degree(r.cfg, static_cast<int>(j))});
  return ops;
}

std::vector<GradedOperator> ideal_operators(const Fq& F, const FiniteModule& m, const IdealSpec& J) {
  std::vector<Matrix> Z;
  for (const Matrix& g : m.gens) Z.push_back(minus_identity(F, g));
  std::vector<GradedOperator> ops;
  for (const GradedPoly& g : J.f_gens) ops.push_back({lift_poly(F, g, Z, m.cfg.f, 1, m.dim), poly_degree(g)});
  for (int i = 0; i < m.cfg.f; ++i) ops.push_back({Z[2 * m.cfg.f + i], 2});
  return ops;
}

std::vector<GradedOperator> ideal_operators_N(const Fq& F, const RestrictedModule& r, const IdealSpecN& JN,
                                              bool in_units_of_pN) {
  const int q = static_cast<int>(r.cfg.p_pow(r.N));
  require(JN.N == r.N, ErrorKind::ConfigMismatch, "ideal and restriction levels differ");
  std::vector<Matrix> Y;
  for (const Matrix& h : r.h) Y.push_back(minus_identity(F, h));
  const int unit = in_units_of_pN ? 1 : q;
  std::vector<GradedOperator> ops;
  for (const GradedPoly& g : JN.f_tilde)
    ops.push_back({lift_poly(F, g, Y, r.cfg.f, q, r.dim), poly_degree(g) / q * unit});
  for (int i = 0; i < r.cfg.f; ++i) ops.push_back({Y[2 * r.cfg.f + i], 2 * unit});
  return ops;
}

ExponentProfile measure_exponents(const Fq& F, const FiniteModule& m, const IdealSpec& J, int N) {
  const IdealSpecN JN = build_JN(J, F, m.cfg.p, N);
  const RestrictedModule r = restrict_module(F, m, N);
  const GradedModule gr = grade(F, m, GradingKind::GR, N);
  const GradedModule gi = grade(F, m, GradingKind::N_INT, N);
  const GradedModule gs = grade_res(F, r);
  const auto ringG = ring_operators(F, m);
  const auto ringH = ring_operators_N(F, r);
  const auto jn_units = ideal_operators_N(F, r, JN, true);
  return {
      min_annihilator_exponent(F, gr, ringG, ideal_operators(F, m, J), J.name),
      min_annihilator_exponent(F, gr, ringG, ideal_operators_N(F, r, JN, false), JN.name),
      min_annihilator_exponent(F, gi, ringH, jn_units, JN.name),
      min_annihilator_exponent(F, gs, ringH, jn_units, JN.name),
  };
}

// --- exponent transfer ---------------------------------------------------

CheckResult check_exponent_transfer(const Fq& F, const FiniteModule& m, const IdealSpec& J, int N) {
  CheckResult res{"exponent_transfer", Status::Pass, m.label + " / " + J.name, {}};
  const ExponentProfile e = measure_exponents(F, m, J, N);
  const std::int64_t q = static_cast<std::int64_t>(m.cfg.p_pow(N));
  const std::int64_t f = m.cfg.f, n = static_cast<std::int64_t>(J.f_gens.size());
  res.data["module"] = m.label;
  res.data["dim"] = m.dim;
  res.data["ideal"] = J.name;
  res.data["ell"] = {{"gr_J", e.gr_J.to_string()},
                     {"gr_JN", e.gr_JN.to_string()},
                     {"int_JN", e.int_JN.to_string()},
                     {"res_JN", e.res_JN.to_string()}};
  for (const auto* r : {&e.gr_J, &e.gr_JN, &e.int_JN, &e.res_JN})
    if (!r->ell_min) res.fail("no annihilating exponent within bound for " + to_string(r->kind) + " " + r->ideal);
  if (res.status == Status::Fail) return res;
  const std::int64_t lJ = *e.gr_J.ell_min, lgr = *e.gr_JN.ell_min, lint = *e.int_JN.ell_min,
                     lres = *e.res_JN.ell_min;
  auto expect = [&](const char* tag, bool ok, const std::string& what) {
    res.data["implications"][tag] = ok;
    if (!ok) res.fail(std::string(tag) + ": " + what);
  };
  expect("i", lgr <= lJ && lJ <= (f + n) * q * f * q * lgr,
         "gr exponents J=" + std::to_string(lJ) + " J_N=" + std::to_string(lgr));
  expect("ii", lint <= q * lgr, "int=" + std::to_string(lint) + " > p^N * gr=" + std::to_string(q * lgr));
  expect("iii", lres <= (4 * f + 1) * lint, "res=" + std::to_string(lres) + " int=" + std::to_string(lint));
  expect("iv", lint <= (4 * f + 1) * lres, "int=" + std::to_string(lint) + " res=" + std::to_string(lres));
  expect("v", lgr <= lint, "gr=" + std::to_string(lgr) + " int=" + std::to_string(lint));
  return res;
}

namespace {

struct ResSummary {
  std::vector<std::size_t> pieces;
  std::optional<int> ell;
  bool operator==(const ResSummary&) const = default;
};

ResSummary summarize(const Fq& F, const RestrictedModule& r, const GradedModule& gm, const IdealSpecN& JN) {
  const auto rep = min_annihilator_exponent(F, gm, ring_operators_N(F, r), ideal_operators_N(F, r, JN, true), JN.name);
  return {gm.piece_dims(), rep.ell_min};
}

// The H-only route: nothing but the restriction data enters.
ResSummary restricted_route(const Fq& F, const RestrictedModule& r, const IdealSpecN& JN) {
  return summarize(F, r, grade_res(F, r), JN);
}

nlohmann::json to_json(const ResSummary& s) {
  return {{"pieces", s.pieces}, {"ell", s.ell ? nlohmann::json(*s.ell) : nlohmann::json("none")}};
}

}  // namespace

CheckResult restriction_determinism(const Fq& F, const GroupAlgebra& alg, const FiniteModule& m, const IdealSpec& J,
                                    int N, Rng& rng, int basis_changes) {
  CheckResult res{"restriction_determinism", Status::Pass, m.label + " / " + J.name, {}};
  const IdealSpecN JN = build_JN(J, F, m.cfg.p, N);
  const FiniteModule D = dualize(F, m);

  // Full data: h_j from the group action, chain from all ordered monomials.
  const GradedModule full_chain = grade_res_by_monomials(F, D, alg.group(), N);
  RestrictedModule via_group{D.cfg, N, D.dim, {}};
  {
    ModuleAction act(D, alg.group());
    for (int j = 0; j < alg.group().rank(); ++j)
      via_group.h.push_back(act.rho(alg.group().pow(alg.group().generator(j), D.cfg.p_pow(N))));
  }
  const ResSummary full = summarize(F, via_group, full_chain, JN);

  const RestrictedModule r = restrict_module(F, D, N);
  const GradedModule h_chain = grade_res(F, r);
  const ResSummary h_only = summarize(F, r, h_chain, JN);
  res.data["module"] = m.label;
  res.data["ideal"] = J.name;
  res.data["full"] = to_json(full);
  res.data["restricted"] = to_json(h_only);
  if (!(r.h == via_group.h)) res.fail("restriction matrices differ between the two routes");
  if (h_only.pieces.size() != full.pieces.size() || full_chain.chain.size() != h_chain.chain.size())
    res.fail("chain lengths differ");
  else
    for (std::size_t k = 0; k < h_chain.chain.size(); ++k)
      if (!(h_chain.chain[k] == full_chain.chain[k])) res.fail("n-chain differs at index " + std::to_string(k));
  if (!(h_only == full)) res.fail("restricted-data summary differs from full-data summary");

  int changed = 0;
  for (int t = 0; t < basis_changes; ++t) {
    const Matrix P = random_invertible(F, m.dim, rng);
    const FiniteModule Dp = dualize(F, change_basis(F, m, P));
    const ResSummary s = restricted_route(F, restrict_module(F, Dp, N), JN);
    ++changed;
    if (!(s == h_only)) res.fail("basis change " + std::to_string(t) + " altered the gr_res summary");
  }
  res.data["basis_changes"] = changed;

  // Twist by an automorphism commuting with the restricted action: the
  // G-action changes, the G^{p^N}-action does not.
  constexpr std::size_t kTwistDim = 24;
  if (D.dim <= kTwistDim) {
    const auto comm = commutant(F, r.h);
    std::optional<Matrix> P;
    for (int t = 0; t < 20 && !P; ++t) {
      Matrix X(D.dim, D.dim);
      for (const Matrix& B : comm) X = mat_add(F, X, mat_scale(F, B, rng.field_element(F)));
      if (rank(F, X) == D.dim) P = X;
    }
    if (P) {
      const auto Pinv = *inverse(F, *P);
      FiniteModule T = D;
      for (Matrix& g : T.gens) g = mat_mul(F, *P, mat_mul(F, g, Pinv));
      const RestrictedModule rt = restrict_module(F, T, N);
      res.data["twist"]["commutant_dim"] = comm.size();
      res.data["twist"]["action_changed"] = !(T.gens == D.gens);
      if (!(rt.h == r.h)) res.fail("twisted module does not share the restricted action");
      const ResSummary s = restricted_route(F, rt, JN);
      const ResSummary sf = summarize(F, rt, grade_res_by_monomials(F, T, alg.group(), N), JN);
      if (!(s == h_only) || !(sf == h_only)) res.fail("twisted module has a different gr_res summary");
    }
  } else {
    res.data["twist"] = "skipped (dim > " + std::to_string(kTwistDim) + ")";
  }
  return res;
}

// --- corpus --------------------------------------------------------------

std::vector<FiniteModule> module_corpus(const GroupAlgebra& alg, std::uint64_t seed, int quotients,
                                        std::size_t max_dim) {
  const PrimeConfig& cfg = alg.config();
  const Fq& F = alg.field();
  std::vector<FiniteModule> out;
  out.push_back(trivial_module(cfg));
  for (int T = 1;; ++T) {
    if (static_cast<std::uint64_t>(T) >= cfg.p_pow(cfg.M)) break;
    TruncatedAlgebra V(alg, T);
    if (V.dim() > max_dim) break;
    out.push_back(truncated_regular_module(V));
  }
  if (quotients <= 0) return out;
  if (cfg.M == 1 && alg.group().order() <= 4096) {
    const FiniteModule reg = regular_module(alg);
    for (int i = 0; i < quotients; ++i) {
      Rng rng(seed, "quotient/" + std::to_string(i));
      FiniteModule q = random_quotient(F, reg, rng, max_dim);
      q.label = "regular/W" + std::to_string(i);
      out.push_back(std::move(q));
    }
    return out;
  }
  std::map<int, FiniteModule> bases;
  for (int i = 0; i < quotients; ++i) {
    int T = 6 + i % 3;
    while (T > 1 && static_cast<std::uint64_t>(T) >= cfg.p_pow(cfg.M)) --T;
    if (!bases.count(T)) {
      TruncatedAlgebra V(alg, T);
      bases.emplace(T, truncated_regular_module(V));
    }
    Rng rng(seed, "quotient/" + std::to_string(i));
    FiniteModule q = random_quotient(F, bases.at(T), rng, max_dim);
    q.label = "V_" + std::to_string(T) + "/W" + std::to_string(i);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace iwalab
