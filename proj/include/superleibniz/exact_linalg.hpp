#ifndef SUPERLEIBNIZ_EXACT_LINALG_HPP
#define SUPERLEIBNIZ_EXACT_LINALG_HPP

// Gaussian elimination over an exact field. Every routine is a free
// function template on the Eigen expression type, so it works for any
// scalar with exact +, -, *, / and comparison against zero (Rational in
// this library; a prime-field type would do as well). Nothing here is
// meant for floating point: pivots are taken as "first nonzero", not
// largest magnitude.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace superleibniz {

template <typename Scalar>
struct RowEchelon {
  /// Reduced row echelon form of the input (same shape).
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> reduced;
  /// Pivot column of each nonzero row, ascending.
  std::vector<Eigen::Index> pivots;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

namespace detail {

template <typename Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Eliminates in place. With `reduce` the pivot rows are normalised and
// entries above pivots are cleared as well; without it only the entries
// below each pivot are cleared, which is enough for the rank.
template <typename Scalar>
std::vector<Eigen::Index> eliminate(RowMajorMatrix<Scalar>& a, bool reduce) {
  using Eigen::Index;
  std::vector<Index> pivots;
  std::vector<Index> support;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) a.row(p).swap(a.row(r));

    if (reduce) {
      const Scalar inv = Scalar(1) / a(r, c);
      for (Index k = c; k < cols; ++k)
        if (a(r, k) != 0) a(r, k) *= inv;
    }
    support.clear();
    for (Index k = c; k < cols; ++k)
      if (a(r, k) != 0) support.push_back(k);

    const Index first = reduce ? 0 : r + 1;
    for (Index i = first; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar factor = a(i, c) / a(r, c);
      for (Index k : support) a(i, k) -= factor * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Reduced row echelon form with pivot columns.
template <typename Derived>
RowEchelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out;
  out.reduced = m;
  out.pivots = detail::eliminate<Scalar>(out.reduced, /*reduce=*/true);
  return out;
}

/// Exact rank.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  detail::RowMajorMatrix<Scalar> a;
  if (m.rows() <= m.cols())
    a = m;
  else
    a = m.transpose();
  return static_cast<Eigen::Index>(detail::eliminate<Scalar>(a, /*reduce=*/false).size());
}

/// Basis of {v : m v = 0}, one column per free variable in ascending column
/// order. Each basis vector has a 1 in its free column and zeros in the
/// other free columns.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> kernel_basis(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Eigen::Index;
  const Index cols = m.cols();
  const auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(cols, cols - ech.rank());
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, out) = 1;
    for (Index i = 0; i < ech.rank(); ++i) {
      const Scalar& v = ech.reduced(i, f);
      if (v != 0) basis(ech.pivots[static_cast<std::size_t>(i)], out) = -v;
    }
    ++out;
  }
  return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
template <typename DerivedM, typename DerivedB>
std::optional<Eigen::Matrix<typename DerivedM::Scalar, Eigen::Dynamic, 1>> solve(
    const Eigen::MatrixBase<DerivedM>& m, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  using Eigen::Index;
  if (b.cols() != 1 || b.rows() != m.rows())
    throw std::invalid_argument("solve: right-hand side has " + std::to_string(b.rows()) +
                                " rows, matrix has " + std::to_string(m.rows()));
  const Index cols = m.cols();
  detail::RowMajorMatrix<Scalar> aug(m.rows(), cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = b;
  const auto pivots = detail::eliminate<Scalar>(aug, /*reduce=*/true);

  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x(pivots[i]) = aug(static_cast<Index>(i), cols);
  }
  return x;
}

/// Canonical basis of the column span: the nonzero rows of the reduced
/// echelon form of the transpose, returned as columns. Two matrices span
/// the same subspace iff their canonical spans are equal.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> canonical_span(
    const Eigen::MatrixBase<Derived>& columns) {
  const auto ech = reduced_row_echelon(columns.transpose());
  return ech.reduced.topRows(ech.rank()).transpose();
}

/// True when v lies in the column span of `columns`.
template <typename DerivedA, typename DerivedV>
bool in_span(const Eigen::MatrixBase<DerivedA>& columns, const Eigen::MatrixBase<DerivedV>& v) {
  return solve(columns, v).has_value();
}

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_EXACT_LINALG_HPP
