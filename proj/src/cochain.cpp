#include "superleibniz/cochain.hpp"

#include <stdexcept>
#include <string>

namespace superleibniz {

namespace {

void check_shape(const SuperBimodule& mod, const Cochain& f) {
  if (f.arity() < 0) throw std::invalid_argument("cochain arity must be nonnegative");
  if (f.coeffs().rows() != mod.dim() || f.coeffs().cols() != tuple_count(mod.algebra().dim(), f.arity()))
    throw std::invalid_argument("cochain of arity " + std::to_string(f.arity()) +
                                " does not match the module dimensions");
}

Parity homogeneous_parity(const SuperSpace& space, const VectorQ& x, const char* op) {
  const auto p = space.parity_of(x);
  if (!p) throw std::invalid_argument(std::string(op) + ": argument is not homogeneous");
  return *p;
}

#ifdef SUPERLEIBNIZ_CHECK_DEGREES
void check_degree(const SuperBimodule& mod, const Cochain& f, Parity expected, const char* op) {
  if (f.degree() != expected || !is_homogeneous(mod, f))
    throw std::logic_error(std::string(op) + ": degree bookkeeping violated");
}
#else
void check_degree(const SuperBimodule&, const Cochain&, Parity, const char*) {}
#endif

// d_{e_a} f for a basis element.
MatrixQ d_basis(const SuperBimodule& mod, Index a, const Cochain& f) {
  const auto& alg = mod.algebra();
  const Index nl = alg.dim();
  const int n = f.arity();
  const Parity pa = alg.parity(a);
  MatrixQ out = mod.left_operator(a) * f.coeffs();
  if (n == 0) return out;

  std::vector<Index> args;
  for (Index t = 0; t < f.coeffs().cols(); ++t) {
    args = decode_tuple(t, nl, n);
    Parity prefix = f.degree();
    for (int i = 0; i < n; ++i) {
      const Index yi = args[static_cast<std::size_t>(i)];
      const int sign = koszul_sign(pa, prefix);
      const auto br = alg.bracket(a, yi);
      for (Index c = 0; c < nl; ++c) {
        if (br(c) == 0) continue;
        args[static_cast<std::size_t>(i)] = c;
        out.col(t) -= (sign * br(c)) * f.coeffs().col(encode_tuple(args, nl));
      }
      args[static_cast<std::size_t>(i)] = yi;
      prefix += alg.parity(yi);
    }
  }
  return out;
}

}  // namespace

Index tuple_count(Index dim, int arity) {
  Index n = 1;
  for (int i = 0; i < arity; ++i) n *= dim;
  return n;
}

Index encode_tuple(std::span<const Index> tuple, Index dim) {
  Index t = 0;
  for (Index x : tuple) t = t * dim + x;
  return t;
}

std::vector<Index> decode_tuple(Index index, Index dim, int arity) {
  std::vector<Index> out(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = index % dim;
    index /= dim;
  }
  return out;
}

Cochain::Cochain(int arity, Parity degree, MatrixQ coeffs)
    : arity_(arity), degree_(degree), coeffs_(std::move(coeffs)) {}

namespace {

// The zero map lies in both parity components, so it adopts the other degree.
void align_degrees(Parity& degree, bool zero, const Cochain& other, const char* op) {
  if (degree == other.degree() || other.is_zero()) return;
  if (!zero) throw std::invalid_argument(std::string(op) + " cochains of different degree");
  degree = other.degree();
}

}  // namespace

Cochain& Cochain::operator+=(const Cochain& other) {
  if (arity_ != other.arity_ || coeffs_.rows() != other.coeffs_.rows() || coeffs_.cols() != other.coeffs_.cols())
    throw std::invalid_argument("adding cochains of different arity or shape");
  align_degrees(degree_, is_zero(), other, "adding");
  coeffs_ += other.coeffs_;
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (arity_ != other.arity_ || coeffs_.rows() != other.coeffs_.rows() || coeffs_.cols() != other.coeffs_.cols())
    throw std::invalid_argument("subtracting cochains of different arity or shape");
  align_degrees(degree_, is_zero(), other, "subtracting");
  coeffs_ -= other.coeffs_;
  return *this;
}

Cochain& Cochain::operator*=(const Rational& s) {
  coeffs_ *= s;
  return *this;
}

Cochain zero_cochain(const SuperBimodule& mod, int arity, Parity degree) {
  return {arity, degree, MatrixQ::Zero(mod.dim(), tuple_count(mod.algebra().dim(), arity))};
}

Cochain basis_cochain(const SuperBimodule& mod, std::span<const Index> tuple, Index k) {
  const int n = static_cast<int>(tuple.size());
  Cochain f = zero_cochain(mod, n, mod.parity(k) + mod.algebra().space().parity_sum(tuple));
  f.coeffs()(k, encode_tuple(tuple, mod.algebra().dim())) = 1;
  return f;
}

Cochain identity_cochain(const LeibnizSuperalgebra& alg) {
  return {1, Parity::Even, MatrixQ::Identity(alg.dim(), alg.dim())};
}

bool is_homogeneous(const SuperBimodule& mod, const Cochain& f) {
  check_shape(mod, f);
  const auto& lspace = mod.algebra().space();
  for (Index t = 0; t < f.coeffs().cols(); ++t) {
    const auto tuple = decode_tuple(t, lspace.dim(), f.arity());
    const Parity want = f.degree() + lspace.parity_sum(tuple);
    for (Index k = 0; k < mod.dim(); ++k)
      if (f.coeffs()(k, t) != 0 && mod.parity(k) != want) return false;
  }
  return true;
}

VectorQ eval(const SuperBimodule& mod, const Cochain& f, std::span<const VectorQ> args) {
  check_shape(mod, f);
  const Index nl = mod.algebra().dim();
  if (static_cast<int>(args.size()) != f.arity())
    throw std::invalid_argument("eval: expected " + std::to_string(f.arity()) + " arguments, got " +
                                std::to_string(args.size()));
  // Coordinates of a_1 ⊗ ... ⊗ a_n in the tuple basis.
  VectorQ w = VectorQ::Ones(1);
  for (const VectorQ& a : args) {
    if (a.size() != nl) throw std::invalid_argument("eval: argument length does not match the algebra");
    VectorQ next = VectorQ::Zero(w.size() * nl);
    for (Index i = 0; i < w.size(); ++i) {
      if (w(i) == 0) continue;
      next.segment(i * nl, nl) = w(i) * a;
    }
    w = std::move(next);
  }
  return f.coeffs() * w;
}

Cochain delta(const SuperBimodule& mod, const Cochain& f) {
  check_shape(mod, f);
  const auto& alg = mod.algebra();
  const Index nl = alg.dim();
  const int n = f.arity();
  Cochain out = zero_cochain(mod, n + 1, f.degree());

  if (n == 0) {
    for (Index a = 0; a < nl; ++a) out.coeffs().col(a) = -(mod.right_operator(a) * f.coeffs().col(0));
    check_degree(mod, out, f.degree(), "delta");
    return out;
  }

  std::vector<Index> x;
  std::vector<Index> args(static_cast<std::size_t>(n));
  std::vector<Parity> p(static_cast<std::size_t>(n + 1));
  for (Index t = 0; t < out.coeffs().cols(); ++t) {
    x = decode_tuple(t, nl, n + 1);
    for (int k = 0; k <= n; ++k) p[static_cast<std::size_t>(k)] = alg.parity(x[static_cast<std::size_t>(k)]);
    auto value = out.coeffs().col(t);

    // Σ_{i<j}: drop slot i, put [x_i, x_j] into slot j. Indices are 0-based
    // here, so the exponent's "i" is i + 1.
    for (int i = 0; i <= n; ++i) {
      Parity between = Parity::Even;
      for (int j = i + 1; j <= n; ++j) {
        const auto br = alg.bracket(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
        const int sign = sign_of_power(i + 1) * (odd_product(p[static_cast<std::size_t>(i)], between) ? -1 : 1);
        between += p[static_cast<std::size_t>(j)];
        if (is_exactly_zero(br)) continue;
        std::size_t w = 0;
        for (int k = 0; k <= n; ++k)
          if (k != i) args[w++] = x[static_cast<std::size_t>(k)];
        const std::size_t slot = static_cast<std::size_t>(j - 1);
        for (Index c = 0; c < nl; ++c) {
          if (br(c) == 0) continue;
          args[slot] = c;
          value += (sign * br(c)) * f.coeffs().col(encode_tuple(args, nl));
        }
      }
    }

    // Σ_{i=1}^{n} [x_i, f(.., x̂_i, ..)]
    Parity prefix = Parity::Even;
    for (int i = 0; i < n; ++i) {
      const Parity pi = p[static_cast<std::size_t>(i)];
      const int sign = sign_of_power(i + 2) * koszul_sign(pi, f.degree() + prefix);
      prefix += pi;
      std::size_t w = 0;
      for (int k = 0; k <= n; ++k)
        if (k != i) args[w++] = x[static_cast<std::size_t>(k)];
      value += sign * (mod.left_operator(x[static_cast<std::size_t>(i)]) * f.coeffs().col(encode_tuple(args, nl)));
    }

    // (-1)^{n+1} [f(x_1..x_n), x_{n+1}]
    for (int k = 0; k < n; ++k) args[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)];
    value += sign_of_power(n + 1) *
             (mod.right_operator(x[static_cast<std::size_t>(n)]) * f.coeffs().col(encode_tuple(args, nl)));
  }
  check_degree(mod, out, f.degree(), "delta");
  return out;
}

Cochain d_op(const SuperBimodule& mod, const VectorQ& x, const Cochain& f) {
  check_shape(mod, f);
  const auto& lspace = mod.algebra().space();
  const Parity px = homogeneous_parity(lspace, x, "d_op");
  Cochain out = zero_cochain(mod, f.arity(), f.degree() + px);
  for (Index a = 0; a < lspace.dim(); ++a)
    if (x(a) != 0) out.coeffs() += x(a) * d_basis(mod, a, f);
  check_degree(mod, out, f.degree() + px, "d_op");
  return out;
}

Cochain restrict(const SuperBimodule& mod, const Cochain& f, const VectorQ& x) {
  check_shape(mod, f);
  if (f.arity() < 1) throw std::invalid_argument("restrict: cochain has arity 0");
  const auto& lspace = mod.algebra().space();
  const Parity px = homogeneous_parity(lspace, x, "restrict");
  const Index block = tuple_count(lspace.dim(), f.arity() - 1);
  Cochain out = zero_cochain(mod, f.arity() - 1, f.degree() + px);
  for (Index a = 0; a < lspace.dim(); ++a)
    if (x(a) != 0) out.coeffs() += x(a) * f.coeffs().middleCols(a * block, block);
  check_degree(mod, out, f.degree() + px, "restrict");
  return out;
}

Cochain act_left(const SuperBimodule& mod, const VectorQ& a, const Cochain& f) { return d_op(mod, a, f); }

Cochain act_right(const SuperBimodule& mod, const Cochain& f, const VectorQ& a) {
  const Parity pa = homogeneous_parity(mod.algebra().space(), a, "act_right");
  Cochain out = d_op(mod, a, f);
  out *= Rational(-koszul_sign(pa, f.degree()));
  return out;
}

VectorQ flatten(const Cochain& f) { return f.coeffs().reshaped(); }

Cochain unflatten(const SuperBimodule& mod, int arity, Parity degree, const VectorQ& v) {
  const Index cols = tuple_count(mod.algebra().dim(), arity);
  if (v.size() != mod.dim() * cols) throw std::invalid_argument("unflatten: wrong coordinate count");
  return {arity, degree, v.reshaped(mod.dim(), cols)};
}

SuperBimodule cochain_module(const SuperBimodule& mod, int arity) {
  const auto& alg = mod.algebra();
  const Index nl = alg.dim();
  const Index nm = mod.dim();
  const Index tuples = tuple_count(nl, arity);
  const Index dim = tuples * nm;

  std::vector<BasisElement> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  for (Index t = 0; t < tuples; ++t) {
    const auto tuple = decode_tuple(t, nl, arity);
    std::string args;
    for (Index a : tuple) args += (args.empty() ? "" : ",") + alg.label(a);
    for (Index k = 0; k < nm; ++k)
      basis.push_back({"(" + args + ")->" + mod.space().label(k), mod.parity(k) + alg.space().parity_sum(tuple)});
  }
  SuperSpace space("C" + std::to_string(arity) + "(" + alg.space().name() + ";" + mod.space().name() + ")",
                   std::move(basis));

  MatrixQ left(dim, nl * dim);
  MatrixQ right(dim, nl * dim);
  for (Index b = 0; b < dim; ++b) {
    const Index t = b / nm;
    const Index k = b % nm;
    const auto tuple = decode_tuple(t, nl, arity);
    Cochain e = basis_cochain(mod, tuple, k);
    for (Index a = 0; a < nl; ++a) {
      const VectorQ image = d_basis(mod, a, e).reshaped();
      left.col(a * dim + b) = image;
      right.col(a * dim + b) = -koszul_sign(alg.parity(a), e.degree()) * image;
    }
  }
  return {alg, std::move(space), std::move(left), std::move(right)};
}

CurriedCochain curry(const SuperBimodule& mod, const Cochain& f, int j) {
  check_shape(mod, f);
  if (j < 0 || j > f.arity())
    throw std::out_of_range("curry: j = " + std::to_string(j) + " outside [0, " + std::to_string(f.arity()) + "]");
  const Index nl = mod.algebra().dim();
  const Index rows = mod.dim() * tuple_count(nl, f.arity() - j);
  MatrixQ coeffs = f.coeffs().reshaped(rows, tuple_count(nl, j));
  return {cochain_module(mod, f.arity() - j), Cochain(j, f.degree(), std::move(coeffs))};
}

}  // namespace superleibniz
