#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwalab/algebra.hpp"
#include "iwalab/check.hpp"
#include "iwalab/graded.hpp"
#include "iwalab/linalg.hpp"
#include "iwalab/random.hpp"

namespace iwalab {

enum class Provenance { Constructed, Loaded };

/// Finite-dimensional F[G/G^{p^M}]-module given by the matrices of the
/// ordered-basis generators (acting on column vectors).
struct FiniteModule {
  PrimeConfig cfg;
  std::size_t dim = 0;
  std::vector<Matrix> gens;
  Provenance provenance = Provenance::Constructed;
  std::string label;
};

/// rho(g) for every group element, built from cached generator powers.
class ModuleAction {
 public:
  ModuleAction(const FiniteModule& m, const QuotientGroup& G);
  Matrix rho(GroupIndex g) const;
  const Matrix& power(int i, std::uint64_t e) const { return powers_[i][e]; }

 private:
  const FiniteModule& m_;
  const QuotientGroup& G_;
  Fq F_;
  std::vector<std::vector<Matrix>> powers_;
};

FiniteModule trivial_module(const PrimeConfig& cfg);
/// Left regular representation on F[G/G^{p^M}]; only sensible for small groups.
FiniteModule regular_module(const GroupAlgebra& alg, std::size_t max_dim = 4096);
/// F[[G]] / (nu > T) with g_i acting as 1 + z_i from the left.
FiniteModule truncated_regular_module(const TruncatedAlgebra& V);
/// Smallest invariant subspace containing the seeds.
Subspace generated_submodule(const Fq& F, const FiniteModule& m, const std::vector<Vec>& seeds);
/// M / S in the basis of the non-pivot coordinates of S. S must be invariant.
FiniteModule quotient_module(const Fq& F, const FiniteModule& m, const Subspace& S);
/// Quotient of `base` (a quotient of the regular module) by the submodule
/// generated by random vectors, drawn until the dimension is at most max_dim.
FiniteModule random_quotient(const Fq& F, const FiniteModule& base, Rng& rng, std::size_t max_dim);
/// P^{-1} rho P.
FiniteModule change_basis(const Fq& F, const FiniteModule& m, const Matrix& P);
/// Contragredient: generators act by the inverse transpose.
FiniteModule dualize(const Fq& F, const FiniteModule& m);
Matrix random_invertible(const Fq& F, std::size_t n, Rng& rng);

struct MultiplicativityReport {
  bool exhaustive = false;
  std::uint64_t pairs = 0;
  std::optional<std::string> witness;
  bool ok() const { return !witness; }
};
/// rho(g) rho(h) = rho(gh), over all pairs at M = 1 and over `samples`
/// seeded pairs otherwise, plus g_i^{p^M} = 1.
MultiplicativityReport check_multiplicativity(const GroupAlgebra& alg, const FiniteModule& m, Rng& rng,
                                              std::uint64_t samples = 10000);
/// Throws RelationCheckFailed with the witness.
void validate_module(const GroupAlgebra& alg, const FiniteModule& m, Rng& rng, std::uint64_t samples = 10000);

/// Basis of Hom_G(a, b), each map a b.dim x a.dim matrix.
std::vector<Matrix> equivariant_maps(const Fq& F, const FiniteModule& a, const FiniteModule& b);
std::optional<Matrix> find_isomorphism(const Fq& F, const FiniteModule& a, const FiniteModule& b, Rng& rng,
                                       int attempts = 20);
/// Basis of the matrices commuting with every listed matrix.
std::vector<Matrix> commutant(const Fq& F, const std::vector<Matrix>& mats);

enum class GradingKind { GR, N_INT, N_RES };
std::string to_string(GradingKind k);

/// A filtration chain[0] = M ⊋ ... ⊋ chain[K] = 0, piece k living in degree
/// degree_unit * k.
struct GradedModule {
  GradingKind kind = GradingKind::GR;
  int N = 0;
  int degree_unit = 1;
  std::vector<Subspace> chain;
  std::vector<std::size_t> piece_dims() const;
  /// First k with chain[k] == chain[k+1] != 0, if any.
  std::optional<int> first_stall() const;
};

/// The data of M seen as a G^{p^N}-module: the matrices of h_j = g_j^{p^N}.
struct RestrictedModule {
  PrimeConfig cfg;
  int N = 1;
  std::size_t dim = 0;
  std::vector<Matrix> h;
};
RestrictedModule restrict_module(const Fq& F, const FiniteModule& m, int N);

GradedModule grade(const Fq& F, const FiniteModule& m, GradingKind kind, int N);
/// n-chain from the restriction data alone, by the weight recursion.
GradedModule grade_res(const Fq& F, const RestrictedModule& r);
/// n-chain as the sum of the images of all ordered monomials in the (h_j - 1)
/// of weight >= k, computed from the G-action (h_j obtained by group powers).
GradedModule grade_res_by_monomials(const Fq& F, const FiniteModule& m, const QuotientGroup& G, int N);

/// Homogeneous operator M -> M raising the filtration index by `degree`.
struct GradedOperator {
  Matrix op;
  int degree = 1;
};

struct AnnihilatorReport {
  std::string ideal;
  GradingKind kind = GradingKind::GR;
  std::optional<int> ell_min;
  int bound = 0;
  std::string to_string() const;
};

/// Smallest l with J^l gr M = 0, where J is generated by `ideal` inside the
/// graded ring generated by `ring` (both acting through the chain).
AnnihilatorReport min_annihilator_exponent(const Fq& F, const GradedModule& gm, const std::vector<GradedOperator>& ring,
                                           const std::vector<GradedOperator>& ideal, const std::string& name);

/// Lifts of the generators as module operators. J on gr: f_i and c_i in the
/// z-matrices. J_N: f~_i and c_i^{p^N} in the (h_j - 1), with degrees measured
/// in the grading (`in_units_of_pN` divides them by p^N).
std::vector<GradedOperator> ideal_operators(const Fq& F, const FiniteModule& m, const IdealSpec& J);
std::vector<GradedOperator> ideal_operators_N(const Fq& F, const RestrictedModule& r, const IdealSpecN& JN,
                                              bool in_units_of_pN);
std::vector<GradedOperator> ring_operators(const Fq& F, const FiniteModule& m);
std::vector<GradedOperator> ring_operators_N(const Fq& F, const RestrictedModule& r);

struct ExponentProfile {
  AnnihilatorReport gr_J, gr_JN, int_JN, res_JN;
};
ExponentProfile measure_exponents(const Fq& F, const FiniteModule& m, const IdealSpec& J, int N);

/// The five implications between the measured exponents.
CheckResult check_exponent_transfer(const Fq& F, const FiniteModule& m, const IdealSpec& J, int N);
/// gr_{N,res} exponent of the dual from restriction data alone against the
/// full-data value, under random basis changes and commutant twists.
CheckResult restriction_determinism(const Fq& F, const GroupAlgebra& alg, const FiniteModule& m, const IdealSpec& J,
                                    int N, Rng& rng, int basis_changes = 5);

/// Trivial module, truncated regular modules and seeded quotients of them,
/// each with dim <= max_dim.
std::vector<FiniteModule> module_corpus(const GroupAlgebra& alg, std::uint64_t seed, int quotients = 10,
                                        std::size_t max_dim = 40);

}  // namespace iwalab
