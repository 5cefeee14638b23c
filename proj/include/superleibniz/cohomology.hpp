#ifndef SUPERLEIBNIZ_COHOMOLOGY_HPP
#define SUPERLEIBNIZ_COHOMOLOGY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "superleibniz/cochain.hpp"

namespace superleibniz {

/// Raised when a requested cochain space exceeds the configured arity cap.
class ArityCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ComplexOptions {
  /// Largest cochain arity that may be materialised.
  int max_arity = 4;
  /// Worker threads for matrix assembly; results do not depend on it.
  int threads = 1;
};

/**
 * Coordinates on C^n_degree(L;M): the basis maps (tuple -> m_k) whose parity
 * parity(m_k) + sum of tuple parities equals `degree`, in lexicographic
 * (tuple, k) order. This order is the stable external ordering of all
 * matrices and bases reported by the library.
 */
class CochainBasisIndex {
 public:
  CochainBasisIndex(const SuperBimodule& mod, int arity, Parity degree);

  int arity() const { return arity_; }
  Parity degree() const { return degree_; }
  Index size() const { return static_cast<Index>(flat_.size()); }

  /// Flat index t*dimM + k of each coordinate.
  const std::vector<Index>& flat_indices() const { return flat_; }
  /// Position of a flat index, or -1 when that basis map has the other parity.
  Index position(Index flat) const { return position_[static_cast<std::size_t>(flat)]; }

  VectorQ coordinates(const Cochain& f) const;
  Cochain cochain(const VectorQ& coords) const;

 private:
  int arity_;
  Parity degree_;
  Index module_dim_;
  Index tuples_;
  std::vector<Index> flat_;
  std::vector<Index> position_;
};

/// Dimension formula dim M * (dim L)^n of C^n(L;M), both parities.
Index cochain_space_dim(const SuperBimodule& mod, int arity);

/// Matrix of δ^n : C^n_parity -> C^{n+1}_parity in the CochainBasisIndex
/// coordinates. Throws ArityCapError when n + 1 > options.max_arity.
MatrixQ delta_matrix(const SuperBimodule& mod, int n, Parity parity, const ComplexOptions& options = {});

struct CohomologyEntry {
  int arity;
  Parity parity;
  Index cochains;
  Index cocycles;
  Index coboundaries;
  Index cohomology;
  /// Present when bases were requested. Columns are coordinates in the
  /// CochainBasisIndex of (arity, parity), in reduced echelon form. The
  /// cohomology columns are cocycle basis vectors, taken in order, that are
  /// independent modulo the coboundaries.
  std::optional<MatrixQ> cocycle_basis;
  std::optional<MatrixQ> coboundary_basis;
  std::optional<MatrixQ> cohomology_basis;
};

class CohomologyTable {
 public:
  explicit CohomologyTable(std::vector<CohomologyEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<CohomologyEntry>& entries() const { return entries_; }
  /// Throws std::out_of_range when (arity, parity) was not computed.
  const CohomologyEntry& at(int arity, Parity parity) const;
  int max_arity() const;

 private:
  std::vector<CohomologyEntry> entries_;
};

/// Z^n, B^n and H^n for 0 <= n <= max_n and both parities.
CohomologyTable cohomology_table(const SuperBimodule& mod, int max_n, bool with_bases = false,
                                 const ComplexOptions& options = {});

/// Basis (columns, M coordinates) of {m in M_0 : [m, x] = 0 for all x}.
MatrixQ annihilator(const SuperBimodule& mod);

/// Basis of the degree-`parity` 1-cochains with δ¹f = 0.
std::vector<Cochain> derivations(const SuperBimodule& mod, Parity parity);

/// Basis of the even maps x -> [m, x], m in M_0.
std::vector<Cochain> inner_derivations(const SuperBimodule& mod);

/// Some g with δg = f, or nullopt when f is not a coboundary.
/// Throws std::invalid_argument for arity 0.
std::optional<Cochain> is_coboundary(const SuperBimodule& mod, const Cochain& f, const ComplexOptions& options = {});

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_COHOMOLOGY_HPP
