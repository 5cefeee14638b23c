#include <map>
#include <stdexcept>
#include <string>

#include "superleibniz/superalgebra.hpp"

namespace superleibniz {

namespace {

using Word = std::vector<Index>;
using LinearCombination = std::map<Word, Rational>;

VectorQ multiply(const MatrixQ& product, Index n, const VectorQ& u, const VectorQ& v) {
  VectorQ out = VectorQ::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (u(i) == 0) continue;
    for (Index j = 0; j < n; ++j)
      if (v(j) != 0) out += (u(i) * v(j)) * product.col(i * n + j);
  }
  return out;
}

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("from_associative: " + what); }

std::string pair_name(const SuperSpace& s, Index i, Index j) { return "(" + s.label(i) + ", " + s.label(j) + ")"; }

}  // namespace

LeibnizSuperalgebra from_associative(const AssociativeSuperalgebra& assoc, const MatrixQ& t_map) {
  const SuperSpace& s = assoc.space;
  const Index n = s.dim();
  if (assoc.product.rows() != n || assoc.product.cols() != n * n) fail("product table must be dim x dim^2");
  if (t_map.rows() != n || t_map.cols() != n) fail("T must be dim x dim");

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (assoc.product(k, i * n + j) != 0 && s.parity(k) != s.parity(i) + s.parity(j))
          fail("product is not graded at " + pair_name(s, i, j) + " -> " + s.label(k));

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const VectorQ left = multiply(assoc.product, n, assoc.product.col(i * n + j), unit_vector(n, k));
        const VectorQ right = multiply(assoc.product, n, unit_vector(n, i), assoc.product.col(j * n + k));
        if (left != right)
          fail("product is not associative at (" + s.label(i) + ", " + s.label(j) + ", " + s.label(k) + ")");
      }

  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < n; ++k)
      if (t_map(k, i) != 0 && s.parity(k) != s.parity(i))
        fail("T is not homogeneous of degree 0 at " + s.label(i));

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const VectorQ ta = t_map.col(i);
      const VectorQ tb = t_map.col(j);
      const VectorQ lhs = t_map * multiply(assoc.product, n, unit_vector(n, i), tb);
      const VectorQ mid = multiply(assoc.product, n, ta, tb);
      const VectorQ rhs = t_map * multiply(assoc.product, n, ta, unit_vector(n, j));
      if (lhs != mid || mid != rhs) fail("T(a(Tb)) = (Ta)(Tb) = T((Ta)b) fails at " + pair_name(s, i, j));
    }

  MatrixQ structure = MatrixQ::Zero(n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const VectorQ ta = t_map.col(i);
      const VectorQ ej = unit_vector(n, j);
      structure.col(i * n + j) = multiply(assoc.product, n, ta, ej) -
                                 koszul_sign(s.parity(i), s.parity(j)) * multiply(assoc.product, n, ej, ta);
    }
  return {SuperSpace(s.name() + "_SL", s.basis()), std::move(structure)};
}

namespace {

class FreeBracket {
 public:
  FreeBracket(const SuperSpace& gens, int max_length) : gens_(gens), max_length_(max_length) {}

  Parity parity(const Word& w) const { return gens_.parity_sum(w); }

  LinearCombination operator()(const Word& w, const Word& x) const {
    LinearCombination out;
    if (static_cast<int>(w.size() + x.size()) > max_length_) return out;
    if (w.size() == 1) {
      // [v, x] = v.x
      Word vx = w;
      vx.insert(vx.end(), x.begin(), x.end());
      out[vx] = 1;
      return out;
    }
    // [y.v, x] = [y, v.x] - (-1)^{yv} v.[y, x]
    const Word y(w.begin(), w.end() - 1);
    const Index v = w.back();
    Word vx{v};
    vx.insert(vx.end(), x.begin(), x.end());
    out = (*this)(y, vx);
    const int s = koszul_sign(parity(y), gens_.parity(v));
    for (const auto& [word, coeff] : (*this)(y, x)) {
      Word prefixed{v};
      prefixed.insert(prefixed.end(), word.begin(), word.end());
      out[prefixed] -= s * coeff;
    }
    return out;
  }

 private:
  const SuperSpace& gens_;
  int max_length_;
};

}  // namespace

LeibnizSuperalgebra free_truncated(const SuperSpace& generators, int max_length) {
  if (generators.dim() < 1) throw std::invalid_argument("free_truncated: need at least one generator");
  if (max_length < 1) throw std::invalid_argument("free_truncated: max_length must be at least 1");

  std::vector<Word> words;
  std::vector<Word> layer{{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (Index g = 0; g < generators.dim(); ++g) {
        Word e = w;
        e.push_back(g);
        next.push_back(std::move(e));
      }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }

  std::map<Word, Index> index;
  std::vector<BasisElement> basis;
  for (const Word& w : words) {
    std::string label;
    for (Index g : w) label += (label.empty() ? "" : ".") + generators.label(g);
    index[w] = static_cast<Index>(basis.size());
    basis.push_back({std::move(label), generators.parity_sum(w)});
  }

  const Index n = static_cast<Index>(words.size());
  const FreeBracket bracket(generators, max_length);
  MatrixQ structure = MatrixQ::Zero(n, n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [word, coeff] : bracket(words[static_cast<std::size_t>(i)], words[static_cast<std::size_t>(j)]))
        structure(index.at(word), i * n + j) += coeff;

  return {SuperSpace("free(" + generators.name() + ", " + std::to_string(max_length) + ")", std::move(basis)),
          std::move(structure)};
}

}  // namespace superleibniz
