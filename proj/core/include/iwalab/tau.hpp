#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "iwalab/check.hpp"
#include "iwalab/graded.hpp"
#include "iwalab/random.hpp"

namespace iwalab {

/// x = p^N floor(x / p^N) + (x mod p^N), coordinatewise.
struct TauSplit {
  Exponents floor_part;  // multiples of p^N
  Exponents frac_part;   // entries below p^N
};
TauSplit tau_split(const Exponents& x, std::uint64_t q);

/// tau(z^x) = z^{floor part} z^{fractional part}, exactly in the group basis.
AlgebraElement tau_rewrite(const GroupAlgebra& alg, const Exponents& x, int N);
/// The same product inside V_T.
Vec tau_truncated(const TruncatedAlgebra& V, const Exponents& x, int N);

struct TauContract {
  int nu_x = 0;
  std::optional<int> nu_tau;   // nullopt: > T
  std::optional<int> nu_diff;  // nu(tau(x) - x), nullopt: > T
  bool ok = false;
};
/// nu(tau x) = nu(x) and nu(tau x - x) > nu(x), read through the cutoff.
TauContract check_tau_contract(const TruncatedAlgebra& V, const Exponents& x, int N);

/// z^x = sum_t coeff_t tau(z^{m_t}) modulo weight > T.
struct SandwichTranscript {
  Exponents x;
  std::vector<std::pair<Exponents, Fq::Elem>> terms;
  int iterations = 0;
};

/// Repeated tau-rewriting of the lowest-weight terms of the residue. Throws
/// NonConvergent if the residue weight does not strictly increase.
class TauRewriter {
 public:
  TauRewriter(const TruncatedAlgebra& V, int N);
  SandwichTranscript decompose(const Exponents& x);
  const TauContract& contract(std::size_t monomial);
  /// Every monomial processed so far, with its contract.
  const std::vector<std::pair<std::size_t, TauContract>>& touched() const { return touched_; }

 private:
  const Vec& tau_of(std::size_t monomial);
  const TruncatedAlgebra& V_;
  int N_;
  std::vector<std::optional<Vec>> tau_cache_;
  std::vector<std::optional<TauContract>> contract_cache_;
  std::vector<std::pair<std::size_t, TauContract>> touched_;
};

/// Re-expands sum_t coeff_t z^{floor_t} z^{frac_t} exactly in the group ring
/// and compares with z^x through the cutoff. Terms sharing a floor part are
/// summed before the multiplication.
bool verify_transcript(const GroupAlgebra& alg, const MonomialSpace& space, const SandwichTranscript& t, int N);

/// n_k F[[G]] in m_G^{k p^N} in n_{k-4f} F[[G]] at one k.
CheckResult check_sandwich(const GroupAlgebra& alg, const TruncatedAlgebra& V, int k, int N, int first_samples,
                           int second_samples, Rng& rng);

/// Pigeonhole step: products of (f+n) p^N generators of J lie in
/// (f~_i) + c, f_i^{p^N} = f~_i mod c, and J_N in J through the cutoff.
CheckResult check_pigeonhole(const GradedRing& R, const IdealSpec& J, int N, int samples, Rng& rng);

}  // namespace iwalab
