#include "superleibniz/random.hpp"

namespace superleibniz {

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> zero(0, 2);
  if (zero(rng) == 0) return Rational(0);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  return Rational(num(rng)) / den(rng);
}

VectorQ random_vector(const SuperSpace& space, Parity parity, Rng& rng) {
  const bool any = parity == Parity::Even ? space.even_dim() > 0 : space.odd_dim() > 0;
  VectorQ v = VectorQ::Zero(space.dim());
  do {
    for (Index k = 0; k < space.dim(); ++k)
      if (space.parity(k) == parity) v(k) = random_rational(rng);
  } while (any && is_exactly_zero(v));
  return v;
}

Cochain random_cochain(const SuperBimodule& mod, int arity, Parity degree, Rng& rng) {
  const Index nl = mod.algebra().dim();
  MatrixQ coeffs = MatrixQ::Zero(mod.dim(), tuple_count(nl, arity));
  for (Index t = 0; t < coeffs.cols(); ++t) {
    const auto tuple = decode_tuple(t, nl, arity);
    const Parity target = degree + mod.algebra().space().parity_sum(tuple);
    for (Index k = 0; k < mod.dim(); ++k)
      if (mod.parity(k) == target) coeffs(k, t) = random_rational(rng);
  }
  return {arity, degree, std::move(coeffs)};
}

}  // namespace superleibniz
