#ifndef SUPERLEIBNIZ_COCHAIN_HPP
#define SUPERLEIBNIZ_COCHAIN_HPP

#include <span>
#include <vector>

#include "superleibniz/superalgebra.hpp"

namespace superleibniz {

/// dim^arity, the number of basis tuples of an n-linear map.
Index tuple_count(Index dim, int arity);

/// Tuple index with the first argument most significant.
Index encode_tuple(std::span<const Index> tuple, Index dim);
std::vector<Index> decode_tuple(Index index, Index dim, int arity);

/**
 * Homogeneous n-cochain L x ... x L -> M.
 *
 * Stored densely: coeffs() has dim M rows and (dim L)^n columns, column t
 * holding f(e_{t_1}, ..., e_{t_n}) for the tuple t = decode_tuple(t). For
 * n = 0 there is a single column, the element of M. Read as a flat
 * column-major vector, entry t*dimM + k is the coefficient of the basis
 * map (t -> m_k); that ordering is the (tuple, module index) lexicographic
 * one used throughout.
 *
 * A cochain does not carry its module. Operators take the module as a
 * separate argument and check that the shapes agree.
 */
class Cochain {
 public:
  Cochain() = default;
  Cochain(int arity, Parity degree, MatrixQ coeffs);

  int arity() const { return arity_; }
  Parity degree() const { return degree_; }
  const MatrixQ& coeffs() const { return coeffs_; }
  MatrixQ& coeffs() { return coeffs_; }

  bool is_zero() const { return is_exactly_zero(coeffs_); }

  /// Sums need equal degrees, except that a zero operand takes the degree
  /// of the other one. Throws std::invalid_argument otherwise.
  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Rational& s);

  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator-(Cochain a) { return a *= Rational(-1); }
  friend Cochain operator*(const Rational& s, Cochain a) { return a *= s; }

  /// Zero cochains compare equal whatever their degree tag.
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.arity_ == b.arity_ && a.coeffs_.rows() == b.coeffs_.rows() && a.coeffs_.cols() == b.coeffs_.cols() &&
           a.coeffs_ == b.coeffs_ && (a.degree_ == b.degree_ || a.is_zero());
  }

 private:
  int arity_ = 0;
  Parity degree_ = Parity::Even;
  MatrixQ coeffs_;
};

Cochain zero_cochain(const SuperBimodule& mod, int arity, Parity degree);

/// The map sending the basis tuple to m_k and every other tuple to zero;
/// its degree is parity(m_k) + sum of the tuple parities.
Cochain basis_cochain(const SuperBimodule& mod, std::span<const Index> tuple, Index k);

/// id: L -> L as an even 1-cochain with values in the adjoint module.
Cochain identity_cochain(const LeibnizSuperalgebra& alg);

/// Every coefficient sits on a module basis element of parity
/// degree + sum of argument parities.
bool is_homogeneous(const SuperBimodule& mod, const Cochain& f);

/// f(args...) by multilinearity; arguments need not be homogeneous.
VectorQ eval(const SuperBimodule& mod, const Cochain& f, std::span<const VectorQ> args);

/**
 * Coboundary. For n >= 1 and basis arguments,
 *
 *   δf(x_1..x_{n+1}) = Σ_{i<j} (-1)^{i + x_i(x_{i+1}+..+x_{j-1})} f(.., x̂_i, .., [x_i,x_j], ..)
 *                    + Σ_{i=1}^{n} (-1)^{i+1 + x_i(f + x_1+..+x_{i-1})} [x_i, f(.., x̂_i, ..)]
 *                    + (-1)^{n+1} [f(x_1..x_n), x_{n+1}]
 *
 * where [x_i,x_j] takes slot j and slot i is dropped. For n = 0,
 * δm(x) = -[m, x]. Degree is preserved.
 */
Cochain delta(const SuperBimodule& mod, const Cochain& f);

/// d_x f(y_1..y_n) = [x, f(y)] - Σ_i (-1)^{x(f + y_1+..+y_{i-1})} f(y_1, .., [x,y_i], .., y_n);
/// d_x m = [x, m] in arity 0. Degree is deg f + deg x.
/// Throws std::invalid_argument when x mixes parities.
Cochain d_op(const SuperBimodule& mod, const VectorQ& x, const Cochain& f);

/// f_x(y_1..y_n) = f(x, y_1..y_n). Throws for arity 0 or mixed x.
Cochain restrict(const SuperBimodule& mod, const Cochain& f, const VectorQ& x);

/// [a, f] = d_a f.
Cochain act_left(const SuperBimodule& mod, const VectorQ& a, const Cochain& f);

/// [f, a] = -(-1)^{af} d_a f. The Koszul sign makes C^n(L;M) a bimodule
/// for odd a and odd f as well; on even arguments this is -[a, f].
Cochain act_right(const SuperBimodule& mod, const Cochain& f, const VectorQ& a);

/**
 * C^arity(L;M) as an L-bimodule under act_left / act_right. Basis: all
 * pairs (tuple, m_k) of both parities in lexicographic order, i.e. the
 * flat coefficient order of a Cochain; the parity of a basis map is
 * parity(m_k) + sum of tuple parities. Labels read "(x,y)->z".
 */
SuperBimodule cochain_module(const SuperBimodule& mod, int arity);

/// f_j ∈ C^j(L; C^{n-j}(L;M)) with f_j(a_1..a_j)(a_{j+1}..a_n) = f(a_1..a_n).
struct CurriedCochain {
  SuperBimodule target;  ///< C^{n-j}(L;M)
  Cochain cochain;       ///< arity j, same degree as f
};

/// Throws std::out_of_range unless 0 <= j <= arity(f).
CurriedCochain curry(const SuperBimodule& mod, const Cochain& f, int j);

/// Inverse of the flat ordering: the cochain whose flat coefficients are v.
Cochain unflatten(const SuperBimodule& mod, int arity, Parity degree, const VectorQ& v);
VectorQ flatten(const Cochain& f);

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_COCHAIN_HPP
