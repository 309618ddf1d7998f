#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "iwalab/config.hpp"
#include "iwalab/padic.hpp"

namespace iwalab {

/// Exponents x_i of g = g_1^{x_1} ... g_{3f}^{x_{3f}} in basis order
/// (A_0..A_{f-1}, B_0..B_{f-1}, C_0..C_{f-1}), each reduced mod p^M.
struct DigitVector {
  std::vector<std::uint64_t> x;
  bool operator==(const DigitVector&) const = default;
  bool is_zero() const;
};

/// Canonical coset representative of an element of G/G^{p^M}.
///
/// GL2: e = {a, b, c, d}, the matrix (a b; c d) with det = 1, a, d = 1 mod p,
/// c = 0 mod p; entries mod p^{M+1} except b, which is reduced mod p^M.
/// QUAT: a + b Pi with a = e[0] + e[1] s, b = e[2] + e[3] s, reduced norm 1,
/// a mod p^{M+1} and b mod p^M.
struct GroupElement {
  GroupCase kind = GroupCase::GL2;
  std::array<UInt, 4> e{};
  bool operator==(const GroupElement&) const = default;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// A value of omega, kept doubled so that half-integers are exact.
struct Omega {
  int twice = 0;
  bool infinite = false;
  bool operator==(const Omega&) const = default;
  std::string to_string() const;
};

/// The ordered basis (or the basis of G^{p^N} obtained by p^N-th powers).
struct OrderedBasis {
  int level = 0;  // N
  std::vector<GroupElement> generators;
  std::vector<Omega> omegas;
};

/// One of the two concrete models of G at truncation level M.
class GroupModel {
 public:
  static std::unique_ptr<GroupModel> create(const PrimeConfig& cfg);
  virtual ~GroupModel() = default;

  const PrimeConfig& config() const { return cfg_; }
  /// O_K / p^{M+1}, the ring holding all entries.
  const UnramifiedRing& ring() const { return ring_; }
  GroupCase kind() const { return cfg_.group; }

  GroupElement identity() const;
  virtual GroupElement multiply(const GroupElement& g, const GroupElement& h) const = 0;
  virtual GroupElement invert(const GroupElement& g) const = 0;
  /// Checks the shape invariants of a canonical representative.
  virtual bool is_canonical(const GroupElement& g) const = 0;
  GroupElement power(const GroupElement& g, std::uint64_t e) const;
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const;

  /// A_0..A_{f-1}, B_0..B_{f-1}, C_0..C_{f-1} as canonical representatives.
  const std::vector<GroupElement>& basis() const { return basis_; }
  /// Doubled omega of each basis element: 1 for A_i and B_i, 2 for C_i.
  int basis_twice_omega(int i) const { return i < 2 * cfg_.f ? 1 : 2; }
  OrderedBasis ordered_basis() const;
  /// Basis (g_i^{p^N}) of G^{p^N}; throws LevelTooDeep when N >= M.
  OrderedBasis subgroup_basis(int N) const;
  /// Membership in G^{p^N}: every digit divisible by p^N.
  bool in_subgroup(const DigitVector& d, int N) const;

  GroupElement compose(const DigitVector& d) const;
  /// Digits of g in the fixed basis order.
  virtual DigitVector decompose(const GroupElement& g) const;
  /// Level-by-level refinement along the omega filtration. Works for both
  /// models; decompose() may use a closed form instead.
  DigitVector decompose_by_refinement(const GroupElement& g) const;

  /// omega through the min-formula over the digits. The identity is infinite;
  /// every other value is at most M + 1/2 under the truncation.
  Omega omega(const GroupElement& g) const;
  static Omega omega_of_digits(const DigitVector& d, const PrimeConfig& cfg);
  /// Doubled omega read off from the entries of a canonical representative,
  /// capped at 2M + 1 (which is reached only by the identity).
  virtual int twice_level(const GroupElement& g) const = 0;
  /// Leading term of g (whose doubled level is `twice`) as F_p coordinates on
  /// the basis elements of that level: 2f values (A then B) for odd levels,
  /// f values (C) for even levels.
  virtual std::vector<std::uint64_t> shadow(const GroupElement& g, int twice) const = 0;

 protected:
  explicit GroupModel(const PrimeConfig& cfg);
  void set_basis(std::vector<GroupElement> basis) { basis_ = std::move(basis); }

  PrimeConfig cfg_;
  UnramifiedRing ring_;
  std::uint64_t digit_mod_;

 private:
  std::vector<GroupElement> basis_;
};

/// G = I_1 / Z_1 realised by determinant-one matrices.
class Gl2Model final : public GroupModel {
 public:
  explicit Gl2Model(const PrimeConfig& cfg);

  GroupElement multiply(const GroupElement& g, const GroupElement& h) const override;
  GroupElement invert(const GroupElement& g) const override;
  bool is_canonical(const GroupElement& g) const override;
  /// Scales an element of I_1 by the central lambda in 1 + pO_K making the
  /// determinant one. Throws NotInGroup when the Iwahori shape fails.
  GroupElement normalize_mod_center(const std::array<UInt, 4>& raw) const;
  /// Closed-form Iwahori factorisation followed by digit solving.
  DigitVector decompose(const GroupElement& g) const override;
  int twice_level(const GroupElement& g) const override;
  std::vector<std::uint64_t> shadow(const GroupElement& g, int twice) const override;

 private:
  std::vector<std::uint64_t> solve_teichmuller_coords(const UInt& y, int level) const;
  // Inverse of the matrix whose columns are the coordinates of [alpha^i].
  std::vector<std::vector<std::uint64_t>> teich_inverse_;
  std::vector<UInt> teich_;  // [alpha^i]
};

/// G = U_1 / Z_1 realised by reduced-norm-one quaternions.
class QuatModel final : public GroupModel {
 public:
  explicit QuatModel(const PrimeConfig& cfg);

  const QuaternionRing& quaternions() const { return quat_; }
  GroupElement multiply(const GroupElement& g, const GroupElement& h) const override;
  GroupElement invert(const GroupElement& g) const override;
  bool is_canonical(const GroupElement& g) const override;
  /// raw * r(raw)^{-1} with r = hensel_sqrt(Nrd(raw)), the retraction onto Z_1.
  /// Throws NotInGroup unless raw lies in 1 + Pi O_D.
  GroupElement normalize_mod_center(const QuaternionInt& raw) const;
  /// The retraction U_1 -> Z_1.
  UInt retraction(const QuaternionInt& raw) const;
  QuaternionInt to_quaternion(const GroupElement& g) const;
  int twice_level(const GroupElement& g) const override;
  std::vector<std::uint64_t> shadow(const GroupElement& g, int twice) const override;

 private:
  GroupElement from_quaternion(const QuaternionInt& q) const;
  QuaternionRing quat_;
};

using GroupIndex = std::uint64_t;

/// The finite group G/G^{p^M} with elements addressed by packed digit
/// vectors: index = sum_i x_i (p^M)^i, a bijection onto [0, p^{3fM}).
///
/// Lookups are memoised. Caches are mutable, so one instance must not be
/// shared between threads.
class QuotientGroup {
 public:
  explicit QuotientGroup(const PrimeConfig& cfg);

  const PrimeConfig& config() const { return cfg_; }
  const GroupModel& model() const { return *model_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t digit_modulus() const { return digit_mod_; }
  int rank() const { return cfg_.rank(); }

  GroupIndex index(const DigitVector& d) const;
  DigitVector digits(GroupIndex i) const;
  std::uint64_t digit(GroupIndex i, int coord) const;
  GroupIndex identity() const { return 0; }
  GroupIndex generator(int i) const;

  const GroupElement& element(GroupIndex i) const;
  GroupIndex index_of(const GroupElement& g) const;
  GroupIndex mul(GroupIndex a, GroupIndex b) const;
  GroupIndex inv(GroupIndex a) const;
  GroupIndex pow(GroupIndex a, std::uint64_t e) const;

 private:
  PrimeConfig cfg_;
  std::unique_ptr<GroupModel> model_;
  std::uint64_t digit_mod_;
  std::uint64_t order_;
  mutable std::unordered_map<GroupIndex, GroupElement> elements_;
  mutable std::unordered_map<GroupElement, GroupIndex, GroupElementHash> indices_;
};

/// [(1 + [zeta] Pi), (1 + gamma Pi)] against 1 + gamma([zeta] - [zeta^{p^f}]) p
/// modulo p Pi O_D for every gamma in O_K / p^2. Returns the number of gammas
/// checked and the failures.
struct CommutatorFormulaReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && checked > 0; }
};
CommutatorFormulaReport check_quaternion_commutator_formula(std::uint32_t p, int f);

}  // namespace iwalab
