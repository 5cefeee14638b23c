#include "superleibniz/superspace.hpp"

#include <set>
#include <stdexcept>

namespace superleibniz {

SuperSpace::SuperSpace(std::string name, std::vector<BasisElement> basis)
    : name_(std::move(name)), basis_(std::move(basis)) {
  std::set<std::string_view> seen;
  for (const auto& b : basis_) {
    if (b.label.empty()) throw std::invalid_argument("basis label must be nonempty");
    if (!seen.insert(b.label).second)
      throw std::invalid_argument("duplicate basis label \"" + b.label + "\"");
  }
}

Index SuperSpace::even_dim() const {
  Index n = 0;
  for (const auto& b : basis_)
    if (b.parity == Parity::Even) ++n;
  return n;
}

std::optional<Index> SuperSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == label) return static_cast<Index>(i);
  return std::nullopt;
}

std::optional<Parity> SuperSpace::parity_of(const VectorQ& v) const {
  if (v.size() != dim()) throw std::invalid_argument("vector length does not match the space");
  bool even = false;
  bool odd = false;
  for (Index i = 0; i < dim(); ++i) {
    if (v(i) == 0) continue;
    (parity(i) == Parity::Even ? even : odd) = true;
  }
  if (even && odd) return std::nullopt;
  return odd ? Parity::Odd : Parity::Even;
}

Parity SuperSpace::parity_sum(std::span<const Index> indices) const {
  Parity p = Parity::Even;
  for (Index i : indices) p += parity(i);
  return p;
}

}  // namespace superleibniz
