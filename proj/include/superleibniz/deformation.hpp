#ifndef SUPERLEIBNIZ_DEFORMATION_HPP
#define SUPERLEIBNIZ_DEFORMATION_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "superleibniz/cohomology.hpp"

namespace superleibniz {

/// μ_t = μ_0 + μ_1 t + ... + μ_N t^N with μ_0 the bracket of `algebra`.
/// Each μ_i is an even 2-cochain with values in the adjoint module.
struct TruncatedDeformation {
  LeibnizSuperalgebra algebra;
  std::vector<Cochain> terms;  ///< μ_1 .. μ_N

  int order() const { return static_cast<int>(terms.size()); }
  /// μ_i for 0 <= i; zero beyond the order, the bracket at i = 0.
  Cochain term(int i) const;
};

TruncatedDeformation zero_deformation(const LeibnizSuperalgebra& alg, int order);

/// Ψ_t = id + ψ_1 t + ... + ψ_N t^N, each ψ_i an even 1-cochain L -> L.
struct FormalIsomorphism {
  std::vector<Cochain> terms;  ///< ψ_1 .. ψ_N

  int order() const { return static_cast<int>(terms.size()); }
};

FormalIsomorphism identity_isomorphism(const LeibnizSuperalgebra& alg, int order);

/// Precondition failure tied to a particular order of the series.
class DeformationError : public std::runtime_error {
 public:
  DeformationError(const std::string& what, int order) : std::runtime_error(what), order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

/**
 * Coefficient of t^r in μ_t(μ_t(a,b),c) - μ_t(a,μ_t(b,c)) + (-1)^{ab} μ_t(b,μ_t(a,c)):
 *
 *   R_r(a,b,c) = Σ_{i+j=r} μ_i(μ_j(a,b),c) - μ_i(a,μ_j(b,c)) + (-1)^{ab} μ_i(b,μ_j(a,c))
 *
 * as an even 3-cochain. Terms past the order are zero, so any
 * 0 <= r <= 2N is meaningful; r = 0 is the Leibniz defect of L. Splitting
 * off the summands with i = 0 or j = 0 gives R_r = -δ²μ_r - R'_r with R'_r
 * from obstruction().
 */
Cochain deformation_residual(const TruncatedDeformation& d, int r);

/// R'_r = Σ_{i+j=r, i,j>=1} μ_i(a,μ_j(b,c)) - (-1)^{ab} μ_i(b,μ_j(a,c)) - μ_i(μ_j(a,b),c).
Cochain obstruction(const TruncatedDeformation& d, int r);

enum class CheckMode {
  /// Orders 1..2N: μ_t as a polynomial satisfies the identity exactly.
  Strict,
  /// Orders 1..N: the identity holds modulo t^{N+1}.
  Jet,
};

struct DeformationFailure {
  int order;
  Index a, b, c;
  VectorQ defect;
};

struct DeformationReport {
  int checked_through;  ///< highest order examined
  std::optional<DeformationFailure> failure;

  bool passed() const { return !failure.has_value(); }
};

/// Scans orders ascending and triples lexicographically; reports the first
/// nonzero residual entry.
DeformationReport check_deformation(const TruncatedDeformation& d, CheckMode mode = CheckMode::Strict);

struct Infinitesimal {
  int index;
  Cochain term;
};

/// First nonzero μ_n.
std::optional<Infinitesimal> infinitesimal(const TruncatedDeformation& d);

/**
 * Solves δ²μ_r = -R'_r for the first r - 1 terms of d (later terms are
 * ignored). Returns the solver's particular solution, or nullopt when the
 * obstruction is not a coboundary. Throws DeformationError when d does not
 * already satisfy orders 1..r-1.
 */
std::optional<Cochain> extend_deformation(const TruncatedDeformation& d, int r, const ComplexOptions& options = {});

/// Ψ_t^{-1} modulo t^{N+1}.
FormalIsomorphism inverse(const FormalIsomorphism& iso);

/// (outer ∘ inner)_k = Σ_{i+j=k} outer_i inner_j, truncated at the common order.
FormalIsomorphism compose(const FormalIsomorphism& outer, const FormalIsomorphism& inner);

/// μ̃_t = Ψ_t ∘ μ_t ∘ (Ψ_t^{-1} × Ψ_t^{-1}) modulo t^{N+1}, so Ψ_t is a formal
/// isomorphism from d to the result. Throws std::invalid_argument when the
/// orders differ.
TruncatedDeformation transform(const TruncatedDeformation& d, const FormalIsomorphism& iso);

/**
 * Searches for Ψ_t from d1 to d2 (μ2_t(Ψa, Ψb) = Ψ μ1_t(a,b) mod t^{N+1})
 * one order at a time. At order r the unknowns are ψ_r, which enters only
 * through δ¹ψ_r, and a derivation D of the bracket applied as Ψ∘exp(t^{r-1}D);
 * both enter linearly, so each step is one exact solve. nullopt when some
 * order has no solution. Throws DeformationError unless
 * both inputs pass the jet check, std::invalid_argument on mismatched
 * algebras or orders.
 */
std::optional<FormalIsomorphism> equivalent_deformations(const TruncatedDeformation& d1,
                                                         const TruncatedDeformation& d2,
                                                         const ComplexOptions& options = {});

struct InfinitesimalRelation {
  Cochain difference;  ///< μ_1 - μ̃_1
  Cochain coboundary;  ///< δ¹ψ_1
  bool holds() const { return difference == coboundary; }
};

/// Compares μ_1 - μ̃_1 with δ¹ψ_1 for Ψ from d1 to d2.
InfinitesimalRelation infinitesimal_relation(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                                             const FormalIsomorphism& iso);

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_DEFORMATION_HPP
