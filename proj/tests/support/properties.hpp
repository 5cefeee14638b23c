#ifndef SUPERLEIBNIZ_TESTS_PROPERTIES_HPP
#define SUPERLEIBNIZ_TESTS_PROPERTIES_HPP

#include <vector>

#include "superleibniz/cochain.hpp"
#include "superleibniz/random.hpp"

// Identities among δ, d_x, f_x, the actions on cochains and currying,
// each evaluated on one random homogeneous instance.
namespace properties {

using namespace superleibniz;

inline Parity random_parity(Rng& rng) {
  return std::uniform_int_distribution<int>(0, 1)(rng) ? Parity::Odd : Parity::Even;
}

inline Rational sign(Parity a, Parity b) { return koszul_sign(a, b); }

struct Instance {
  Cochain f;
  VectorQ x, y;
  Parity px, py;
};

inline Instance draw(const SuperBimodule& mod, int arity, Rng& rng) {
  const auto& space = mod.algebra().space();
  const Parity pf = random_parity(rng);
  VectorQ x = random_vector(space, random_parity(rng), rng);
  VectorQ y = random_vector(space, random_parity(rng), rng);
  // A zero vector counts as even.
  const Parity px = *space.parity_of(x), py = *space.parity_of(y);
  return {random_cochain(mod, arity, pf, rng), std::move(x), std::move(y), px, py};
}

/// (d_x f)_y = d_x(f_y) - (-1)^{xf} f_{[x,y]}
inline bool restrict_of_d(const SuperBimodule& mod, const Instance& s) {
  const VectorQ xy = bracket_eval(mod.algebra(), s.x, s.y);
  return restrict(mod, d_op(mod, s.x, s.f), s.y) ==
         d_op(mod, s.x, restrict(mod, s.f, s.y)) - sign(s.px, s.f.degree()) * restrict(mod, s.f, xy);
}

/// (δf)_x = (-1)^{xf} d_x f - δ(f_x)
inline bool restrict_of_delta(const SuperBimodule& mod, const Instance& s) {
  return restrict(mod, delta(mod, s.f), s.x) ==
         sign(s.px, s.f.degree()) * d_op(mod, s.x, s.f) - delta(mod, restrict(mod, s.f, s.x));
}

/// d_x d_y f - (-1)^{xy} d_y d_x f = d_{[x,y]} f
inline bool d_commutator(const SuperBimodule& mod, const Instance& s) {
  const VectorQ xy = bracket_eval(mod.algebra(), s.x, s.y);
  return d_op(mod, s.x, d_op(mod, s.y, s.f)) - sign(s.px, s.py) * d_op(mod, s.y, d_op(mod, s.x, s.f)) ==
         d_op(mod, xy, s.f);
}

/// δ d_x f = d_x δ f
inline bool delta_commutes_with_d(const SuperBimodule& mod, const Instance& s) {
  return delta(mod, d_op(mod, s.x, s.f)) == d_op(mod, s.x, delta(mod, s.f));
}

/// The three bimodule axioms for a = x, b = y and the element f of C^n(L;M).
inline bool cochain_module_axioms(const SuperBimodule& mod, const Instance& s) {
  const auto& alg = mod.algebra();
  const VectorQ& a = s.x;
  const VectorQ& b = s.y;
  const Cochain& f = s.f;
  const Parity pf = f.degree();
  const VectorQ ab = bracket_eval(alg, a, b);
  const bool one = act_left(mod, ab, f) ==
                   act_left(mod, a, act_left(mod, b, f)) - sign(s.px, s.py) * act_left(mod, b, act_left(mod, a, f));
  const bool two = act_right(mod, act_left(mod, a, f), b) ==
                   act_left(mod, a, act_right(mod, f, b)) - sign(s.px, pf) * act_right(mod, f, ab);
  const bool three = act_right(mod, act_right(mod, f, a), b) ==
                     act_right(mod, f, ab) - sign(pf, s.px) * act_left(mod, a, act_right(mod, f, b));
  return one && two && three;
}

/// δ(f_j)(a_1..a_{j+1}) = (δf)_{j+1}(a_1..a_{j+1}) + (-1)^j δ(f_{j+1}(a_1..a_{j+1}))
/// with the outer δ on the left taken in C*(L; C^{n-j}(L;M)).
inline bool currying(const SuperBimodule& mod, const Cochain& f, int j, const std::vector<VectorQ>& args) {
  const int n = f.arity();
  Parity p = f.degree();
  for (const auto& v : args) p += *mod.algebra().space().parity_of(v);

  const CurriedCochain fj = curry(mod, f, j);
  const Cochain lhs = unflatten(mod, n - j, p, eval(fj.target, delta(fj.target, fj.cochain), args));

  const CurriedCochain df = curry(mod, delta(mod, f), j + 1);
  const Cochain first = unflatten(mod, n - j, p, eval(df.target, df.cochain, args));

  const CurriedCochain fj1 = curry(mod, f, j + 1);
  const Cochain value = unflatten(mod, n - j - 1, p, eval(fj1.target, fj1.cochain, args));
  const Cochain second = delta(mod, value);

  return lhs == first + Rational(sign_of_power(j)) * second;
}

}  // namespace properties

#endif  // SUPERLEIBNIZ_TESTS_PROPERTIES_HPP
