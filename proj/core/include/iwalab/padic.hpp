#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "iwalab/fq.hpp"

namespace iwalab {

inline constexpr int kMaxDegree = 4;

/// Element of O_K / p^k, K = Q_{p^f} unramified, as coordinates on
/// 1, x, ..., x^{f-1} in (Z/p^k)[x]/(phi(x)), phi the lift of standard_modulus.
struct UInt {
  std::array<std::uint64_t, kMaxDegree> c{};
  bool operator==(const UInt&) const = default;
};

/// The ring O_K / p^k. Operations are pure; the ring object only carries the
/// modulus data, so elements never reference it.
class UnramifiedRing {
 public:
  UnramifiedRing(std::uint32_t p, int f, int precision);

  std::uint32_t p() const { return p_; }
  int degree() const { return f_; }
  int precision() const { return k_; }
  std::uint64_t modulus() const { return q_; }
  const Fq& residue_field() const { return residue_; }

  UInt zero() const { return {}; }
  UInt one() const { return from_int(1); }
  UInt from_int(std::int64_t v) const;
  /// Coordinate-wise lift of a residue field element (not multiplicative).
  UInt naive_lift(Fq::Elem a) const;
  Fq::Elem residue(const UInt& x) const;

  UInt add(const UInt& x, const UInt& y) const;
  UInt sub(const UInt& x, const UInt& y) const;
  UInt neg(const UInt& x) const;
  UInt mul(const UInt& x, const UInt& y) const;
  UInt scale(const UInt& x, std::int64_t s) const;
  UInt pow(const UInt& x, std::uint64_t e) const;
  /// Multiplicative inverse; throws Error(InputNotUnitOne) on non-units.
  UInt inv(const UInt& x) const;
  bool is_unit(const UInt& x) const;
  bool is_zero(const UInt& x) const { return x == UInt{}; }

  /// Largest v with p^v dividing every coordinate, capped at the precision.
  int valuation(const UInt& x) const;
  /// Exact division by p^v; requires valuation(x) >= v. The top v digits of
  /// the result are unknown and set to zero.
  UInt divide_p_power(const UInt& x, int v) const;
  /// Multiplication by p^v.
  UInt mul_p_power(const UInt& x, int v) const;
  /// Reduction of the coordinates modulo p^level (level <= precision).
  UInt truncate(const UInt& x, int level) const;

  /// Teichmueller lift [a]: the unique (p^f - 1)-th root of unity (or 0)
  /// reducing to a, computed as the fixpoint of x -> x^{p^f}.
  UInt teichmuller(Fq::Elem a) const;
  /// Square root congruent to 1 mod p of an element congruent to 1 mod p.
  /// Throws Error(InputNotUnitOne) otherwise.
  UInt hensel_sqrt(const UInt& u) const;

  /// Coefficients of phi, constant term first (f + 1 entries).
  const std::vector<std::uint64_t>& phi() const { return phi_; }

 private:
  std::uint64_t reduce(std::int64_t v) const;

  std::uint32_t p_;
  int f_;
  int k_;
  std::uint64_t q_;
  Fq residue_;
  std::vector<std::uint64_t> phi_;
};

/// Element u + v*s of O_{K2} / p^k where K2 = K(s), s^2 = d and d is the
/// Teichmueller lift of a non-square of F_{p^f}. Then s itself is a root of
/// unity of order prime to p, i.e. s = [zeta] for zeta = s mod p, and the
/// non-trivial automorphism of K2/K is u + v s -> u - v s.
struct QInt {
  UInt u;
  UInt v;
  bool operator==(const QInt&) const = default;
};

class QuadExtRing {
 public:
  QuadExtRing(std::uint32_t p, int f, int precision);

  const UnramifiedRing& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  int degree() const { return base_.degree(); }
  int precision() const { return base_.precision(); }
  /// d = s^2, a Teichmueller non-square.
  const UInt& d() const { return d_; }
  Fq::Elem non_square() const { return delta_; }

  QInt zero() const { return {}; }
  QInt one() const { return {base_.one(), base_.zero()}; }
  QInt embed(const UInt& x) const { return {x, base_.zero()}; }
  /// [zeta] = s.
  QInt zeta() const { return {base_.zero(), base_.one()}; }

  QInt add(const QInt& x, const QInt& y) const;
  QInt sub(const QInt& x, const QInt& y) const;
  QInt neg(const QInt& x) const;
  QInt mul(const QInt& x, const QInt& y) const;
  QInt scale(const QInt& x, const UInt& s) const;
  QInt pow(const QInt& x, std::uint64_t e) const;
  QInt inv(const QInt& x) const;
  /// The generator of Gal(K2/K): on residues it is x -> x^{p^f}.
  QInt frobenius(const QInt& x) const { return {x.u, base_.neg(x.v)}; }
  /// x * frobenius(x), an element of the K-subring.
  UInt norm(const QInt& x) const;
  int valuation(const QInt& x) const;
  QInt truncate(const QInt& x, int level) const;
  bool is_zero(const QInt& x) const { return base_.is_zero(x.u) && base_.is_zero(x.v); }

  /// Teichmueller lift of the residue class u0 + v0*zeta (fixpoint of
  /// x -> x^{p^{2f}}).
  QInt teichmuller(Fq::Elem u0, Fq::Elem v0) const;

 private:
  UnramifiedRing base_;
  Fq::Elem delta_;
  UInt d_;
};

/// a + b*Pi in the maximal order O_D of the quaternion algebra of invariant
/// 1/2 over K, with Pi^2 = p and Pi x = frobenius(x) Pi.
struct QuaternionInt {
  QInt a;
  QInt b;
  bool operator==(const QuaternionInt&) const = default;
};

class QuaternionRing {
 public:
  QuaternionRing(std::uint32_t p, int f, int precision);

  const QuadExtRing& quad() const { return quad_; }
  const UnramifiedRing& base() const { return quad_.base(); }
  std::uint32_t p() const { return quad_.p(); }
  int precision() const { return quad_.precision(); }

  QuaternionInt zero() const { return {}; }
  QuaternionInt one() const { return {quad_.one(), quad_.zero()}; }
  QuaternionInt pi() const { return {quad_.zero(), quad_.one()}; }
  QuaternionInt embed(const QInt& x) const { return {x, quad_.zero()}; }

  QuaternionInt add(const QuaternionInt& x, const QuaternionInt& y) const;
  QuaternionInt sub(const QuaternionInt& x, const QuaternionInt& y) const;
  QuaternionInt mul(const QuaternionInt& x, const QuaternionInt& y) const;
  QuaternionInt scale(const QuaternionInt& x, const UInt& s) const;
  QuaternionInt pow(const QuaternionInt& x, std::uint64_t e) const;
  /// Reduced norm a a^sigma - p b b^sigma.
  UInt nrd(const QuaternionInt& x) const;
  /// Canonical involution: a^sigma - b Pi.
  QuaternionInt conj(const QuaternionInt& x) const;
  /// Inverse of an element with unit reduced norm.
  QuaternionInt inv(const QuaternionInt& x) const;
  /// Pi-adic valuation halved, i.e. v_p with v_p(Pi) = 1/2, returned doubled.
  int twice_valuation(const QuaternionInt& x) const;

  /// Matrix of left multiplication by x on the K-basis (1, s, Pi, s Pi)
  /// (columns are the images of the basis vectors); used to cross-check nrd.
  std::array<std::array<UInt, 4>, 4> left_regular_matrix(const QuaternionInt& x) const;

 private:
  QuadExtRing quad_;
};

/// Determinant of a 4x4 matrix over O_K/p^k by cofactor expansion.
UInt det4(const UnramifiedRing& ring, const std::array<std::array<UInt, 4>, 4>& m);

}  // namespace iwalab
