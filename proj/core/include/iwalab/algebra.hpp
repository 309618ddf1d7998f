#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iwalab/config.hpp"
#include "iwalab/fq.hpp"
#include "iwalab/group.hpp"

namespace iwalab {

/// Sparse element of F[G/G^{p^M}] in the group basis. Keys are packed digit
/// vectors (see QuotientGroup::index); zero coefficients are never stored.
struct AlgebraElement {
  std::map<GroupIndex, Fq::Elem> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const AlgebraElement&) const = default;
};

/// Binomial coefficient mod p through Lucas' theorem.
std::uint32_t lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// The group ring F[G/G^{p^M}] with F = F_{p^f}.
class GroupAlgebra {
 public:
  explicit GroupAlgebra(const PrimeConfig& cfg);

  const PrimeConfig& config() const { return group_.config(); }
  const QuotientGroup& group() const { return group_; }
  const Fq& field() const { return field_; }

  AlgebraElement zero() const { return {}; }
  AlgebraElement one() const { return basis_element(0); }
  AlgebraElement basis_element(GroupIndex g, Fq::Elem c = 1) const;
  AlgebraElement from_group(const GroupElement& g) const { return basis_element(group_.index_of(g)); }
  /// z_i = g_i - 1.
  AlgebraElement z(int i) const;

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement neg(const AlgebraElement& x) const;
  AlgebraElement scale(const AlgebraElement& x, Fq::Elem s) const;
  /// x += s * y
  void axpy(AlgebraElement& x, Fq::Elem s, const AlgebraElement& y) const;
  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement pow(const AlgebraElement& x, std::uint64_t e) const;
  AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) const;

  /// z^k = (g_1 - 1)^{k_1} ... (g_n - 1)^{k_n} written in the group basis.
  AlgebraElement monomial(const std::vector<std::uint32_t>& k) const;
  /// True when every group element in the support lies in G^{p^N}.
  bool supported_on_subgroup(const AlgebraElement& x, int N) const;

 private:
  QuotientGroup group_;
  Fq field_;
};

}  // namespace iwalab
