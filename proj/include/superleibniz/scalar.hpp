#ifndef SUPERLEIBNIZ_SCALAR_HPP
#define SUPERLEIBNIZ_SCALAR_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace superleibniz {

// Exact rationals. Expression templates are off so the type composes
// cleanly with Eigen's own expression templates.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;

/// Parses "p", "-p" or "p/q" into canonical form. Anything else (decimals,
/// exponents, zero denominators, whitespace) throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical string: "3", "-1/2".
std::string format_rational(const Rational& value);

/// True when every coefficient is exactly zero.
template <typename Derived>
bool is_exactly_zero(const Eigen::DenseBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) return false;
  return true;
}

/// Basis vector e_i of length n.
inline VectorQ unit_vector(Index n, Index i) {
  VectorQ v = VectorQ::Zero(n);
  v(i) = 1;
  return v;
}

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_SCALAR_HPP
