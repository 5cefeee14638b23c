#ifndef SUPERLEIBNIZ_SUPERALGEBRA_HPP
#define SUPERLEIBNIZ_SUPERALGEBRA_HPP

#include <array>
#include <vector>

#include "superleibniz/superspace.hpp"

namespace superleibniz {

/**
 * Left Leibniz superalgebra given by structure constants.
 *
 * The structure matrix has dim rows and dim*dim columns; column i*dim + j
 * holds the coordinates of [e_i, e_j]. Any table is accepted: grading and
 * the Leibniz identity are properties to check (check_grading,
 * check_leibniz), so that a broken input can be reported with a witness.
 */
class LeibnizSuperalgebra {
 public:
  LeibnizSuperalgebra() = default;
  LeibnizSuperalgebra(SuperSpace space, MatrixQ structure);

  const SuperSpace& space() const { return space_; }
  Index dim() const { return space_.dim(); }
  Parity parity(Index i) const { return space_.parity(i); }
  const std::string& label(Index i) const { return space_.label(i); }

  const MatrixQ& structure() const { return structure_; }
  /// [e_i, e_j]
  auto bracket(Index i, Index j) const { return structure_.col(i * dim() + j); }

  friend bool operator==(const LeibnizSuperalgebra&, const LeibnizSuperalgebra&) = default;

 private:
  SuperSpace space_;
  MatrixQ structure_;
};

/// Bilinear extension of the structure constants. Throws on size mismatch.
VectorQ bracket_eval(const LeibnizSuperalgebra& alg, const VectorQ& a, const VectorQ& b);

/// Algebra with every bracket zero; even basis u1..up, odd basis v1..vq.
LeibnizSuperalgebra abelian(Index p, Index q);

/// Three-dimensional example with x, y even and z odd, [y,x] = [y,y] = x
/// and every other bracket of basis elements zero.
LeibnizSuperalgebra paper_example();

/**
 * Bimodule M over L. Action tables are dim M rows by dim L * dim M columns:
 * column a*dimM + m of `left` holds [e_a, m_m] and of `right` holds
 * [m_m, e_a]. Module axioms are checked by check_module.
 */
class SuperBimodule {
 public:
  SuperBimodule() = default;
  SuperBimodule(LeibnizSuperalgebra algebra, SuperSpace space, MatrixQ left, MatrixQ right);

  const LeibnizSuperalgebra& algebra() const { return algebra_; }
  const SuperSpace& space() const { return space_; }
  Index dim() const { return space_.dim(); }
  Parity parity(Index k) const { return space_.parity(k); }

  const MatrixQ& left() const { return left_; }
  const MatrixQ& right() const { return right_; }

  /// m -> [e_a, m] as a dimM x dimM block.
  auto left_operator(Index a) const { return left_.middleCols(a * dim(), dim()); }
  /// m -> [m, e_a] as a dimM x dimM block.
  auto right_operator(Index a) const { return right_.middleCols(a * dim(), dim()); }

  friend bool operator==(const SuperBimodule&, const SuperBimodule&) = default;

 private:
  LeibnizSuperalgebra algebra_;
  SuperSpace space_;
  MatrixQ left_;
  MatrixQ right_;
};

/// [a, m] for vectors a in L and m in M.
VectorQ left_act(const SuperBimodule& mod, const VectorQ& a, const VectorQ& m);
/// [m, a] for vectors m in M and a in L.
VectorQ right_act(const SuperBimodule& mod, const VectorQ& m, const VectorQ& a);

/// L as a module over itself; both actions are the bracket.
SuperBimodule adjoint_module(const LeibnizSuperalgebra& alg);

/// `space` with both actions zero.
SuperBimodule zero_module(const LeibnizSuperalgebra& alg, SuperSpace space);
/// Zero actions on a copy of the algebra's own space.
SuperBimodule zero_module(const LeibnizSuperalgebra& alg);

// ---------------------------------------------------------------------------
// Checks

template <typename Failure>
struct CheckReport {
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

/// Nonzero coefficient c_{ij}^k with parity(e_k) != parity(e_i) + parity(e_j).
struct GradingViolation {
  Index i, j, k;
  friend bool operator==(const GradingViolation&, const GradingViolation&) = default;
};

/// Basis triple (a, b, c) with defect [[a,b],c] - [a,[b,c]] + (-1)^{ab}[b,[a,c]] != 0.
struct LeibnizDefect {
  Index a, b, c;
  VectorQ defect;
};

CheckReport<GradingViolation> check_grading(const LeibnizSuperalgebra& alg);
CheckReport<LeibnizDefect> check_leibniz(const LeibnizSuperalgebra& alg);

/// Graded antisymmetry [a,b] = -(-1)^{ab}[b,a] on all basis pairs.
bool is_lie(const LeibnizSuperalgebra& alg);

/// Defect of one of the three bimodule axioms on a basis triple. The
/// triple is ordered as it appears in the axiom: (a, b, m) for axiom 1,
/// (a, m, b) for axiom 2, (m, a, b) for axiom 3. Axiom 0 marks an action
/// that breaks the grading; its triple is (a, m, k) for the left action or
/// (m, a, k) for the right action, and the defect is empty.
struct ModuleDefect {
  int axiom;
  std::array<Index, 3> triple;
  VectorQ defect;
};

CheckReport<ModuleDefect> check_module(const SuperBimodule& mod);

// ---------------------------------------------------------------------------
// Constructions

/// Associative superalgebra by structure constants; column i*dim + j of
/// `product` holds e_i e_j.
struct AssociativeSuperalgebra {
  SuperSpace space;
  MatrixQ product;
};

/**
 * A_SL: bracket [a,b] = (Ta)b - (-1)^{ab} b(Ta) for an associative
 * superalgebra A and a degree-0 map T (column i of `t_map` is T e_i)
 * satisfying T(a(Tb)) = (Ta)(Tb) = T((Ta)b). Associativity, grading of the
 * product, homogeneity of T and the condition on T are checked on basis
 * elements; any failure throws std::invalid_argument naming a witness.
 */
LeibnizSuperalgebra from_associative(const AssociativeSuperalgebra& assoc, const MatrixQ& t_map);

/**
 * Free Leibniz superalgebra on `generators` modulo words longer than
 * `max_length`. Basis: words of length 1..max_length ordered by length and
 * then lexicographically; labels are the letter labels joined with '.'.
 * Brackets follow [v, w] = v.w and [y.v, w] = [y, v.w] - (-1)^{yv} v.[y, w].
 */
LeibnizSuperalgebra free_truncated(const SuperSpace& generators, int max_length);

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_SUPERALGEBRA_HPP
