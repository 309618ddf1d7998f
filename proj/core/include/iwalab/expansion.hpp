#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "iwalab/algebra.hpp"
#include "iwalab/linalg.hpp"

namespace iwalab {

using Exponents = std::vector<std::uint32_t>;

/// nu-weight of z_i: 1 for the A and B generators, 2 for the C generators.
inline int generator_weight(int i, int f) { return i < 2 * f ? 1 : 2; }
int monomial_weight(const Exponents& k, int f);

/// All exponent vectors of weight <= T (in nu units), ordered by weight and
/// then lexicographically. Throws CutoffBeyondFaithful unless T < p^M.
class MonomialSpace {
 public:
  MonomialSpace(const PrimeConfig& cfg, int cutoff);

  int cutoff() const { return cutoff_; }
  int rank() const { return rank_; }
  int degree() const { return f_; }
  std::size_t size() const { return weights_.size(); }
  Exponents exponents(std::size_t i) const;
  std::uint32_t exponent(std::size_t i, int coord) const { return exps_[i * rank_ + coord]; }
  int weight(std::size_t i) const { return weights_[i]; }
  /// Index range [begin, end) of the monomials of weight exactly w.
  std::size_t begin_of_weight(int w) const;
  std::size_t end_of_weight(int w) const { return begin_of_weight(w + 1); }
  std::optional<std::size_t> find(const Exponents& k) const;
  /// Same lookup by packed key sum_i k_i (p^M)^i.
  std::optional<std::size_t> find_packed(std::uint64_t key) const;
  std::uint64_t radix() const { return radix_; }

 private:
  int cutoff_;
  int rank_;
  int f_;
  std::uint64_t radix_;
  std::vector<std::uint32_t> exps_;
  std::vector<int> weights_;
  std::vector<std::size_t> weight_begin_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

/// Coefficients of z^k with weight <= cutoff; keys ordered lexicographically.
struct MonomialExpansion {
  int cutoff = 0;
  std::map<Exponents, Fq::Elem> coeffs;
  bool operator==(const MonomialExpansion&) const = default;
};

/// Dense coefficient vector of x over the monomial space.
Vec expand_dense(const GroupAlgebra& alg, const MonomialSpace& space, const AlgebraElement& x);
MonomialExpansion expand(const GroupAlgebra& alg, const AlgebraElement& x, int cutoff);
MonomialExpansion to_expansion(const MonomialSpace& space, const Vec& v);

/// nu = 2 w-bar. nullopt stands for "> T": every coefficient through the
/// cutoff vanishes.
std::optional<int> nu(const GroupAlgebra& alg, const AlgebraElement& x, int cutoff);
std::optional<int> nu_of(const MonomialSpace& space, const Vec& v);
std::string nu_to_string(const std::optional<int>& v, int cutoff);

/// x in m_G^j, decided as nu(x) >= j. Needs j <= T.
bool m_power_member(const GroupAlgebra& alg, const AlgebraElement& x, int j, int cutoff);

/// F[G/G^{p^M}] modulo the span of monomials of weight > T, with left and
/// right multiplication by each z_i as sparse operators. The operators are
/// built on first use; an instance is not safe for concurrent use.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(const GroupAlgebra& alg, int cutoff);

  const GroupAlgebra& algebra() const { return alg_; }
  const MonomialSpace& space() const { return space_; }
  const Fq& field() const { return alg_.field(); }
  int cutoff() const { return space_.cutoff(); }
  std::size_t dim() const { return space_.size(); }

  Vec expand(const AlgebraElement& x) const { return expand_dense(alg_, space_, x); }
  /// Group-basis representative of v (sum of monomial lifts).
  AlgebraElement lift(const Vec& v) const;
  Vec unit(std::size_t i) const;
  /// z^k truncated (zero when its weight exceeds T).
  Vec monomial(const Exponents& k) const;
  std::optional<int> nu(const Vec& v) const { return nu_of(space_, v); }

  const SparseOp& left(int i) const;
  const SparseOp& right(int i) const;
  Vec left_mul(int i, const Vec& v) const;
  Vec right_mul(int i, const Vec& v) const;
  /// z^k * v, applying the innermost factor first.
  Vec left_monomial(const Exponents& k, const Vec& v) const;
  /// v * z^k, applying the outermost-left factor first.
  Vec right_monomial(const Vec& v, const Exponents& k) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec commutator(const Vec& x, const Vec& y) const;

  /// Span of the monomials of weight in [j, T].
  Subspace weight_at_least(int j) const;

 private:
  SparseOp build(int i, bool on_left) const;

  const GroupAlgebra& alg_;
  MonomialSpace space_;
  mutable std::vector<std::optional<SparseOp>> left_;
  mutable std::vector<std::optional<SparseOp>> right_;
};

enum class FiltrationKind { M_ADIC, N_INT, N_RES };
std::string to_string(FiltrationKind k);

/// M_ADIC j: m_G^j. N_INT j: m_G^{j p^N}. N_RES j: n_j F[[G]], with
/// n_j = F[[G^{p^N}]]_{nu >= j p^N}; j may be negative for N_RES.
struct FiltrationTag {
  FiltrationKind kind = FiltrationKind::M_ADIC;
  int index = 0;
};

/// m_G^0, m_G^1, ..., m_G^{jmax} inside V_T, each obtained from the previous
/// one by multiplying with the z_i on both sides.
std::vector<Subspace> m_adic_chain(const TruncatedAlgebra& V, int jmax);
Subspace span_of_filtration(const TruncatedAlgebra& V, FiltrationTag tag, int N);

}  // namespace iwalab
