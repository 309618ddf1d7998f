#include "iwalab/graded.hpp"

#include <algorithm>
#include <map>

#include "iwalab/error.hpp"

namespace iwalab {
namespace {

Exponents term_exponents(const GradedTerm& t, int f) {
  Exponents k(3 * f, 0);
  auto put = [&](const Exponents& src, int offset) {
    require(src.size() <= static_cast<std::size_t>(f), ErrorKind::ConfigMismatch, "term exponent vector too long");
    for (std::size_t i = 0; i < src.size(); ++i) k[offset + i] = src[i];
  };
  put(t.m, 0);
  put(t.n, f);
  put(t.l, 2 * f);
  return k;
}

std::uint32_t sum(const Exponents& e) {
  std::uint32_t s = 0;
  for (auto x : e) s += x;
  return s;
}

}  // namespace

int term_degree(const GradedTerm& t) { return static_cast<int>(sum(t.m) + sum(t.n) + 2 * sum(t.l)); }

bool is_homogeneous(const GradedPoly& g) {
  return std::all_of(g.begin(), g.end(), [&](const GradedTerm& t) { return term_degree(t) == term_degree(g.front()); });
}

int poly_degree(const GradedPoly& g) {
  require(!g.empty(), ErrorKind::NonHomogeneousInput, "empty generator");
  require(is_homogeneous(g), ErrorKind::NonHomogeneousInput, "generator is not homogeneous");
  return term_degree(g.front());
}

bool IdealSpec::homogeneous() const {
  return std::all_of(f_gens.begin(), f_gens.end(), [](const GradedPoly& g) { return !g.empty() && is_homogeneous(g); });
}

std::vector<GradedPoly> IdealSpec::generators() const {
  std::vector<GradedPoly> out = f_gens;
  for (int i = 0; i < f; ++i) {
    GradedTerm t;
    t.l.assign(f, 0);
    t.l[i] = 1;
    out.push_back({t});
  }
  return out;
}

std::vector<GradedPoly> IdealSpecN::generators() const {
  std::vector<GradedPoly> out = f_tilde;
  for (int i = 0; i < f; ++i) {
    GradedTerm t;
    t.l.assign(f, 0);
    t.l[i] = static_cast<std::uint32_t>(c_power);
    out.push_back({t});
  }
  return out;
}

IdealSpec homogenize(const IdealSpec& J) {
  IdealSpec out = J;
  out.f_gens.clear();
  for (const auto& g : J.f_gens) {
    std::map<int, GradedPoly> parts;
    for (const auto& t : g)
      if (t.coeff != 0) parts[term_degree(t)].push_back(t);
    for (auto& [d, p] : parts) out.f_gens.push_back(std::move(p));
  }
  return out;
}

IdealSpecN build_JN(const IdealSpec& J, const Fq& F, std::uint32_t p, int N) {
  require(J.homogeneous(), ErrorKind::NonHomogeneousInput, "ideal '" + J.name + "' has a non-homogeneous generator");
  require(N >= 0, ErrorKind::ConfigError, "negative subgroup level");
  IdealSpecN out;
  out.name = J.name + "_N";
  out.f = J.f;
  out.N = N;
  out.c_power = ipow(p, N);
  const auto q = static_cast<std::uint32_t>(out.c_power);
  for (const auto& g : J.f_gens) {
    GradedPoly h;
    for (GradedTerm t : g) {
      t.coeff = F.frobenius(t.coeff, N);
      for (auto& e : t.m) e *= q;
      for (auto& e : t.n) e *= q;
      for (auto& e : t.l) e *= q;
      h.push_back(std::move(t));
    }
    out.f_tilde.push_back(std::move(h));
  }
  return out;
}

std::vector<std::string> default_ideal_names() { return {"c", "a+c", "mixed"}; }

IdealSpec default_ideal(const std::string& name, const Fq& F) {
  const int f = F.degree();
  IdealSpec J;
  J.name = name;
  J.f = f;
  auto unit = [&](int i) {
    Exponents e(f, 0);
    e[i] = 1;
    return e;
  };
  if (name == "c") return J;
  if (name == "a+c") {
    for (int i = 0; i < f; ++i) J.f_gens.push_back({GradedTerm{unit(i), {}, {}, 1}});
    return J;
  }
  if (name == "mixed") {
    const Fq::Elem alpha = F.primitive();
    Exponents two(f, 0);
    two[0] = 2;
    J.f_gens.push_back({GradedTerm{unit(0), {}, {}, 1}, GradedTerm{{}, unit(0), {}, alpha}});
    J.f_gens.push_back({GradedTerm{two, {}, {}, alpha}, GradedTerm{{}, two, {}, 1}});
    return J;
  }
  raise(ErrorKind::ConfigError, "unknown ideal '" + name + "'");
}

// ---------------------------------------------------------------- GradedRing

GradedRing::GradedRing(const TruncatedAlgebra& V) : V_(V) {}

void GradedRing::require_degree(int d) const {
  require(d <= cutoff(), ErrorKind::CutoffBeyondFaithful,
          "degree " + std::to_string(d) + " exceeds the cutoff " + std::to_string(cutoff()));
}

std::size_t GradedRing::piece_dim(int j) const {
  const auto& S = V_.space();
  return S.end_of_weight(j) - S.begin_of_weight(j);
}

Vec GradedRing::project(const Vec& v, int j) const {
  Vec out(V_.dim(), 0);
  const auto& S = V_.space();
  if (j < 0 || j > cutoff()) return out;
  for (std::size_t i = S.begin_of_weight(j); i < S.end_of_weight(j); ++i) out[i] = v[i];
  return out;
}

Vec GradedRing::to_local(const Vec& v, int j) const {
  const auto& S = V_.space();
  if (j < 0 || j > cutoff()) return {};
  return Vec(v.begin() + S.begin_of_weight(j), v.begin() + S.end_of_weight(j));
}

Vec GradedRing::to_global(const Vec& local, int j) const {
  Vec out(V_.dim(), 0);
  std::copy(local.begin(), local.end(), out.begin() + V_.space().begin_of_weight(j));
  return out;
}

GradedClass GradedRing::one() const { return {0, V_.unit(0)}; }

GradedClass GradedRing::generator_class(int i) const {
  const int d = generator_weight(i, degree_f());
  require_degree(d);
  Exponents k(3 * degree_f(), 0);
  k[i] = 1;
  return {d, V_.monomial(k)};
}

GradedClass GradedRing::class_of(const AlgebraElement& x) const {
  const Vec v = V_.expand(x);
  const auto n = V_.nu(v);
  require(n.has_value(), ErrorKind::CutoffBeyondFaithful, "element vanishes through the cutoff");
  return {*n, project(v, *n)};
}

GradedClass GradedRing::add(const GradedClass& x, const GradedClass& y) const {
  require(x.degree == y.degree, ErrorKind::ConfigMismatch, "adding classes of different degrees");
  return {x.degree, vec_add(field(), x.coords, y.coords)};
}

GradedClass GradedRing::scale(const GradedClass& x, Fq::Elem s) const {
  return {x.degree, vec_scale(field(), x.coords, s)};
}

GradedClass GradedRing::mul(const GradedClass& x, const GradedClass& y) const {
  const int d = x.degree + y.degree;
  require_degree(d);
  return {d, project(V_.mul(x.coords, y.coords), d)};
}

GradedClass GradedRing::pow(const GradedClass& x, std::uint64_t e) const {
  GradedClass r = one();
  for (std::uint64_t i = 0; i < e; ++i) r = mul(r, x);
  return r;
}

GradedClass GradedRing::commutator(const GradedClass& x, const GradedClass& y) const {
  const int d = x.degree + y.degree;
  require_degree(d);
  return {d, project(V_.commutator(x.coords, y.coords), d)};
}

GradedClass GradedRing::of_poly(const GradedPoly& g) const {
  const int d = poly_degree(g);
  require_degree(d);
  GradedClass out = zero(d);
  for (const auto& t : g) {
    auto idx = V_.space().find(term_exponents(t, degree_f()));
    require(idx.has_value(), ErrorKind::CutoffBeyondFaithful, "term outside the monomial space");
    out.coords[*idx] = field().add(out.coords[*idx], t.coeff);
  }
  return out;
}

Vec GradedRing::left(int i, const Vec& v, int j) const {
  return project(V_.left_mul(i, v), j + generator_weight(i, degree_f()));
}

Vec GradedRing::right(int i, const Vec& v, int j) const {
  return project(V_.right_mul(i, v), j + generator_weight(i, degree_f()));
}

std::vector<Subspace> GradedRing::ideal_table(const std::vector<GradedPoly>& gens) const {
  std::vector<GradedClass> classes;
  for (const auto& g : gens)
    if (poly_degree(g) <= cutoff()) classes.push_back(of_poly(g));
  return ideal_table(classes);
}

std::vector<Subspace> GradedRing::ideal_table(const std::vector<GradedClass>& gens) const {
  const Fq& F = field();
  const int T = cutoff();
  const int n = 3 * degree_f();
  std::vector<Subspace> table;
  for (int j = 0; j <= T; ++j) table.emplace_back(piece_dim(j));
  for (int j = 0; j <= T; ++j) {
    for (const auto& g : gens)
      if (g.degree == j) table[j].insert(F, to_local(g.coords, j));
    for (int i = 0; i < n; ++i) {
      const int w = generator_weight(i, degree_f());
      if (j - w < 0) continue;
      for (const auto& b : table[j - w].basis()) {
        const Vec g = to_global(b, j - w);
        table[j].insert(F, to_local(V_.left_mul(i, g), j));
        table[j].insert(F, to_local(V_.right_mul(i, g), j));
      }
    }
  }
  return table;
}

GradedClass GradedRing::mul_poly(const GradedClass& x, const GradedPoly& g) const {
  const int d = x.degree + poly_degree(g);
  require_degree(d);
  Vec acc(V_.dim(), 0);
  for (const auto& t : g) vec_axpy(field(), acc, t.coeff, V_.right_monomial(x.coords, term_exponents(t, degree_f())));
  return {d, project(acc, d)};
}

GradedClass commutator_class(const GradedRing& R, const GradedClass& x, const GradedClass& y) {
  return R.commutator(x, y);
}

bool check_power_commutator_identity(const GradedRing& R, int i, const GradedClass& x, std::uint64_t l) {
  require(l >= 1, ErrorKind::ConfigError, "exponent must be positive");
  const GradedClass zi = R.generator_class(i);
  const GradedClass lhs = R.commutator(R.pow(zi, l), x);
  const Fq::Elem lc = R.field().from_int(static_cast<std::int64_t>(l % R.field().characteristic()));
  const GradedClass rhs = R.scale(R.mul(R.pow(zi, l - 1), R.commutator(zi, x)), lc);
  return lhs.coords == rhs.coords;
}

bool check_centrality(const GradedRing& R, const GradedClass& x) {
  for (int g = 0; g < 2 * R.degree_f(); ++g)
    if (!R.commutator(x, R.generator_class(g)).is_zero()) return false;
  return true;
}

std::vector<std::size_t> hilbert_dims(const GroupAlgebra& alg, int jmax, bool quotient_by_c) {
  const TruncatedAlgebra V(alg, jmax + 1);
  const auto chain = m_adic_chain(V, jmax + 1);
  std::vector<std::size_t> dims;
  for (int j = 0; j <= jmax; ++j) dims.push_back(chain[j].dim() - chain[j + 1].dim());
  if (!quotient_by_c) return dims;
  const GradedRing R(V);
  IdealSpec c;
  c.f = alg.config().f;
  const auto table = R.ideal_table(c.generators());
  for (int j = 0; j <= jmax; ++j) dims[j] -= table[j].dim();
  return dims;
}

std::vector<std::size_t> hilbert_oracle(int f, int jmax, bool quotient_by_c) {
  // Coefficients of prod (1 - t)^{-2f} (1 - t^2)^{-f}, by repeated prefix sums.
  std::vector<std::size_t> s(jmax + 1, 0);
  s[0] = 1;
  auto multiply = [&](int w) {
    for (int j = w; j <= jmax; ++j) s[j] += s[j - w];
  };
  for (int i = 0; i < 2 * f; ++i) multiply(1);
  if (!quotient_by_c)
    for (int i = 0; i < f; ++i) multiply(2);
  return s;
}

RegularSequenceReport check_regular_sequence(const GradedRing& R) {
  RegularSequenceReport rep;
  const Fq& F = R.field();
  const int f = R.degree_f();
  const int T = R.cutoff();
  for (int i = 0; i < f; ++i) {
    std::vector<GradedClass> prev;
    for (int k = 0; k < i; ++k) prev.push_back(R.c(k));
    const auto I = R.ideal_table(prev);
    for (int j = 0; j + 2 <= T; ++j) {
      Subspace image = I[j + 2];
      const auto& S = R.truncated().space();
      for (std::size_t m = S.begin_of_weight(j); m < S.end_of_weight(j); ++m)
        image.insert(F, R.to_local(R.left(2 * f + i, R.truncated().unit(m), j), j + 2));
      const std::size_t rank = image.dim() - I[j + 2].dim();
      const std::size_t source = R.piece_dim(j) - I[j].dim();
      if (rank != source) {
        rep.ok = false;
        rep.failures.push_back("c_" + std::to_string(i) + " in degree " + std::to_string(j) + ": rank " +
                               std::to_string(rank) + " < " + std::to_string(source));
      }
    }
  }
  return rep;
}

bool ideal_contained(const std::vector<Subspace>& small, const std::vector<Subspace>& big, const Fq& F) {
  const std::size_t n = std::min(small.size(), big.size());
  for (std::size_t j = 0; j < n; ++j)
    if (!big[j].contains(F, small[j])) return false;
  return true;
}

}  // namespace iwalab
