#pragma once

#include <cstdint>
#include <vector>

namespace iwalab {

/// Monic polynomial c_0 + c_1 x + ... + x^f over F_p whose root generates
/// F_{p^f}^x. Chosen as the smallest such polynomial when the coefficient
/// vector (c_0, ..., c_{f-1}) is read as a base-p number, so every run uses
/// the same model of F_{p^f} and of its unramified lift.
/// Returns the f+1 coefficients, constant term first.
std::vector<std::uint32_t> standard_modulus(std::uint32_t p, int f);

/// The finite field F_{p^f}, elements encoded as integers sum c_i p^i where
/// (c_i) are the coordinates on 1, a, ..., a^{f-1} and a is the root of
/// standard_modulus(p, f). Arithmetic goes through log/exp tables.
class Fq {
 public:
  using Elem = std::uint32_t;

  Fq(std::uint32_t p, int f);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return f_; }
  std::uint32_t order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const;
  /// The generator a of F_{p^f} over F_p (the root of the standard modulus).
  Elem generator() const { return f_ == 1 ? primitive_ : p_; }
  /// A generator of the multiplicative group.
  Elem primitive() const { return primitive_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  /// x -> x^{p^times}
  Elem frobenius(Elem a, int times = 1) const;

  /// Coordinates on 1, a, ..., a^{f-1}, each in [0, p).
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(const std::vector<std::uint32_t>& c) const;
  Elem from_coords(const std::uint64_t* c) const;

  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool operator==(const Fq& o) const { return p_ == o.p_ && f_ == o.f_; }

 private:
  std::uint32_t p_;
  int f_;
  std::uint32_t q_;
  Elem primitive_ = 1;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;  // filled when q is small
};

}  // namespace iwalab
