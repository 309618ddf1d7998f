#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwalab/expansion.hpp"

namespace iwalab {

/// A homogeneous class in gr F[[G]]. `coords` has the length of the weight-<=T
/// monomial space and is supported on the monomials of weight `degree`.
struct GradedClass {
  int degree = 0;
  Vec coords;
  bool is_zero() const { return iwalab::is_zero(coords); }
  bool operator==(const GradedClass&) const = default;
};

/// One term coeff * a^m b^n c^l of a graded polynomial, read as the ordered
/// product a_0^{m_0} ... a_{f-1}^{m_{f-1}} b_0^{n_0} ... c_{f-1}^{l_{f-1}}.
/// Empty exponent vectors mean all zeros.
struct GradedTerm {
  Exponents m, n, l;
  Fq::Elem coeff = 1;
  bool operator==(const GradedTerm&) const = default;
};
using GradedPoly = std::vector<GradedTerm>;

int term_degree(const GradedTerm& t);
/// Degree of a homogeneous polynomial; throws NonHomogeneousInput otherwise.
int poly_degree(const GradedPoly& g);
bool is_homogeneous(const GradedPoly& g);

/// J = f + c: the f_i in the a's and b's; c = (c_0, ..., c_{f-1}) is always
/// part of the ideal and is not listed.
struct IdealSpec {
  std::string name;
  int f = 1;
  std::vector<GradedPoly> f_gens;
  bool homogeneous() const;
  /// f_gens followed by c_0, ..., c_{f-1}.
  std::vector<GradedPoly> generators() const;
};

/// J_N = (f~_i) + (c_i^{p^N}).
struct IdealSpecN {
  std::string name;
  int f = 1;
  int N = 1;
  std::vector<GradedPoly> f_tilde;
  std::uint64_t c_power = 1;
  std::vector<GradedPoly> generators() const;
};

/// Replaces each generator by its homogeneous components.
IdealSpec homogenize(const IdealSpec& J);
/// Frobenius-twisted p^N-th power generators. Throws NonHomogeneousInput.
IdealSpecN build_JN(const IdealSpec& J, const Fq& F, std::uint32_t p, int N);
/// "c", "a+c" and "mixed" (a_0 + alpha b_0, alpha a_0^2 + b_0^2 with alpha
/// the primitive element of F).
IdealSpec default_ideal(const std::string& name, const Fq& F);
std::vector<std::string> default_ideal_names();

/// gr F[[G]] through degree T, with the graded pieces spanned by the
/// monomials of exact weight j.
class GradedRing {
 public:
  explicit GradedRing(const TruncatedAlgebra& V);

  const TruncatedAlgebra& truncated() const { return V_; }
  const Fq& field() const { return V_.field(); }
  int cutoff() const { return V_.cutoff(); }
  int degree_f() const { return V_.space().degree(); }
  std::size_t piece_dim(int j) const;
  Vec project(const Vec& v, int j) const;
  /// Coordinates of the weight-j slice of v, and back.
  Vec to_local(const Vec& v, int j) const;
  Vec to_global(const Vec& local, int j) const;

  /// Class of z_i: a_i for i < f, b_{i-f} for i < 2f, c_{i-2f} otherwise.
  GradedClass generator_class(int i) const;
  GradedClass a(int i) const { return generator_class(i); }
  GradedClass b(int i) const { return generator_class(degree_f() + i); }
  GradedClass c(int i) const { return generator_class(2 * degree_f() + i); }
  GradedClass zero(int degree) const { return {degree, Vec(V_.dim(), 0)}; }
  GradedClass one() const;

  /// Leading class of x; throws CutoffBeyondFaithful if nu(x) > T.
  GradedClass class_of(const AlgebraElement& x) const;
  AlgebraElement representative(const GradedClass& x) const { return V_.lift(x.coords); }
  GradedClass add(const GradedClass& x, const GradedClass& y) const;
  GradedClass scale(const GradedClass& x, Fq::Elem s) const;
  GradedClass mul(const GradedClass& x, const GradedClass& y) const;
  GradedClass pow(const GradedClass& x, std::uint64_t e) const;
  GradedClass commutator(const GradedClass& x, const GradedClass& y) const;
  GradedClass of_poly(const GradedPoly& g) const;

  /// Graded left/right multiplication by the class of z_i on a homogeneous
  /// vector of degree j.
  Vec left(int i, const Vec& v, int j) const;
  Vec right(int i, const Vec& v, int j) const;

  /// Right multiplication of a homogeneous class by a graded polynomial.
  GradedClass mul_poly(const GradedClass& x, const GradedPoly& g) const;

  /// Two-sided graded ideal generated by `gens`, degree by degree through T.
  /// Entry j lives in the local coordinates of gr^j.
  std::vector<Subspace> ideal_table(const std::vector<GradedPoly>& gens) const;
  std::vector<Subspace> ideal_table(const std::vector<GradedClass>& gens) const;

 private:
  void require_degree(int d) const;
  const TruncatedAlgebra& V_;
};

/// [x, y] in degree deg x + deg y.
GradedClass commutator_class(const GradedRing& R, const GradedClass& x, const GradedClass& y);
/// [z_i^l, x] = l z_i^{l-1} [z_i, x] in gr.
bool check_power_commutator_identity(const GradedRing& R, int i, const GradedClass& x, std::uint64_t l);
/// [x, g] = 0 for every degree-one generator g.
bool check_centrality(const GradedRing& R, const GradedClass& x);

/// dim gr^j for j = 0..jmax from the m-adic chain, optionally modulo c.
std::vector<std::size_t> hilbert_dims(const GroupAlgebra& alg, int jmax, bool quotient_by_c);
/// Combinatorial counts: monomials in 2f degree-1 and f degree-2 variables,
/// or (with the flag) in 2f degree-1 variables only.
std::vector<std::size_t> hilbert_oracle(int f, int jmax, bool quotient_by_c);

/// c_i is injective on gr/(c_0, ..., c_{i-1}) in every degree j with j + 2 <= T.
struct RegularSequenceReport {
  bool ok = true;
  std::vector<std::string> failures;
};
RegularSequenceReport check_regular_sequence(const GradedRing& R);

/// Degreewise containment of two ideal tables.
bool ideal_contained(const std::vector<Subspace>& small, const std::vector<Subspace>& big, const Fq& F);

}  // namespace iwalab
