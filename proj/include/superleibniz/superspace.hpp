#ifndef SUPERLEIBNIZ_SUPERSPACE_HPP
#define SUPERLEIBNIZ_SUPERSPACE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superleibniz/parity.hpp"
#include "superleibniz/scalar.hpp"

namespace superleibniz {

struct BasisElement {
  std::string label;
  Parity parity = Parity::Even;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional Z/2-graded space with an ordered, labelled basis.
class SuperSpace {
 public:
  SuperSpace() = default;
  /// Throws std::invalid_argument on empty or duplicate labels.
  SuperSpace(std::string name, std::vector<BasisElement> basis);

  const std::string& name() const { return name_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  Index even_dim() const;
  Index odd_dim() const { return dim() - even_dim(); }

  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(Index i) const { return basis_[static_cast<std::size_t>(i)].label; }
  Parity parity(Index i) const { return basis_[static_cast<std::size_t>(i)].parity; }

  std::optional<Index> index_of(std::string_view label) const;

  /// Parity of a homogeneous vector; nullopt when it mixes parities. The
  /// zero vector counts as even.
  std::optional<Parity> parity_of(const VectorQ& v) const;

  /// Sum of the parities of the indexed basis elements.
  Parity parity_sum(std::span<const Index> indices) const;

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
};

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_SUPERSPACE_HPP
