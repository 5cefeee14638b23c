#ifndef SUPERLEIBNIZ_RANDOM_HPP
#define SUPERLEIBNIZ_RANDOM_HPP

#include <random>

#include "superleibniz/cochain.hpp"

namespace superleibniz {

using Rng = std::mt19937_64;

/// p/q with |p| <= 5 and 1 <= q <= 4, zero with probability about 1/3.
Rational random_rational(Rng& rng);

/// Random homogeneous vector of the given parity in `space`, nonzero unless
/// `space` has no basis element of that parity.
VectorQ random_vector(const SuperSpace& space, Parity parity, Rng& rng);

/// Random homogeneous cochain; every admissible coefficient is drawn by
/// random_rational.
Cochain random_cochain(const SuperBimodule& mod, int arity, Parity degree, Rng& rng);

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_RANDOM_HPP
