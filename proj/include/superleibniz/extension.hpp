#ifndef SUPERLEIBNIZ_EXTENSION_HPP
#define SUPERLEIBNIZ_EXTENSION_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "superleibniz/cohomology.hpp"

namespace superleibniz {

/**
 * Extension 0 -> M -> E -> L -> 0 with E = L ⊕ M as a vector space.
 *
 * The total algebra's basis is L's basis followed by M's basis, labelled
 * "L.<label>" and "M.<label>"; the inclusion is m -> (0, m) and the
 * projection (x, m) -> x.
 */
struct Extension {
  SuperBimodule coefficients;  ///< M, which also carries the base algebra L
  LeibnizSuperalgebra total;
  Cochain cocycle;  ///< h, even, arity 2

  const LeibnizSuperalgebra& base() const { return coefficients.algebra(); }
};

/// [(x,m),(y,n)] = ([x,y], [x,n] + [m,y] + h(x,y)). The table is returned
/// whether or not δh = 0; check_extension reports the failures.
/// Throws std::invalid_argument unless h is an even 2-cochain on `mod`.
Extension build_extension(const SuperBimodule& mod, const Cochain& h);

struct ExtensionViolation {
  enum class Kind {
    LeftInclusion,   ///< [x, i(m)] != i([x, m])
    RightInclusion,  ///< [i(m), x] != i([m, x])
    AbelianFiber,    ///< [i(m), i(m')] != 0
    Projection,      ///< π[u, v] != [πu, πv]
  };
  Kind kind;
  Index u, v;  ///< basis indices of the total algebra
  VectorQ defect;
};

std::string_view to_string(ExtensionViolation::Kind kind);

struct ExtensionReport {
  std::vector<ExtensionViolation> violations;
  CheckReport<GradingViolation> grading;
  CheckReport<LeibnizDefect> leibniz;

  bool passed() const { return violations.empty() && grading.passed() && leibniz.passed(); }
};

ExtensionReport check_extension(const Extension& e);

/// f with δf = h1 - h2, after verifying that ψ(x,m) = (x, m + f(x)) is an
/// algebra isomorphism E1 -> E2 compatible with inclusion and projection;
/// nullopt when h1 and h2 lie in different classes. Throws
/// std::invalid_argument when the two extensions have different (L, M).
std::optional<Cochain> extensions_equivalent(const Extension& e1, const Extension& e2);

/// Matrix of ψ(x,m) = (x, m + f(x)) on the total basis.
MatrixQ extension_morphism(const SuperBimodule& mod, const Cochain& f);

/// True when `map` is multiplicative from e1.total to e2.total on all basis pairs.
bool is_algebra_morphism(const LeibnizSuperalgebra& from, const LeibnizSuperalgebra& to, const MatrixQ& map);

/// One extension E_h per basis vector of H^2_0(L;M).
std::vector<Extension> classify_extensions(const SuperBimodule& mod, const ComplexOptions& options = {});

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_EXTENSION_HPP
