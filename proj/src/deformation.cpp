#include "superleibniz/deformation.hpp"

#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "superleibniz/exact_linalg.hpp"

namespace superleibniz {

namespace {

void check_term(const LeibnizSuperalgebra& alg, const Cochain& mu, int arity, const char* what) {
  const Index n = alg.dim();
  if (mu.arity() != arity || mu.degree() != Parity::Even || mu.coeffs().rows() != n ||
      mu.coeffs().cols() != tuple_count(n, arity))
    throw std::invalid_argument(std::string(what) + " must be an even " + std::to_string(arity) +
                                "-cochain on the algebra");
}

void check_deformation_terms(const TruncatedDeformation& d) {
  for (const auto& mu : d.terms) check_term(d.algebra, mu, 2, "deformation term");
}

// Adds sign * Σ_{i+j=r} [μ_i(μ_j(a,b),c) - μ_i(a,μ_j(b,c)) + (-1)^{ab} μ_i(b,μ_j(a,c))]
// into `out` (dim x dim^3), restricted to pairs accepted by `use`.
template <typename Pred>
void accumulate_residual(const TruncatedDeformation& d, int r, Pred use, MatrixQ& out) {
  const auto& alg = d.algebra;
  const Index n = alg.dim();
  for (int i = 0; i <= r; ++i) {
    const int j = r - i;
    if (!use(i, j) || i > d.order() || j > d.order()) continue;
    const Cochain mi = d.term(i);
    const Cochain mj = d.term(j);
    if (mi.is_zero() || mj.is_zero()) continue;
    const MatrixQ& outer = mi.coeffs();
    const MatrixQ& inner = mj.coeffs();
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const int s_ab = koszul_sign(alg.parity(a), alg.parity(b));
        for (Index c = 0; c < n; ++c) {
          auto col = out.col((a * n + b) * n + c);
          for (Index k = 0; k < n; ++k) {
            const Rational& ab = inner(k, a * n + b);
            if (ab != 0) col += ab * outer.col(k * n + c);
            const Rational& bc = inner(k, b * n + c);
            if (bc != 0) col -= bc * outer.col(a * n + k);
            const Rational& ac = inner(k, a * n + c);
            if (ac != 0) col += (s_ab * ac) * outer.col(b * n + k);
          }
        }
      }
  }
}

std::vector<MatrixQ> series(const FormalIsomorphism& iso, Index n) {
  std::vector<MatrixQ> out{MatrixQ::Identity(n, n)};
  for (const auto& psi : iso.terms) out.push_back(psi.coeffs());
  return out;
}

FormalIsomorphism from_series(const std::vector<MatrixQ>& s) {
  FormalIsomorphism iso;
  for (std::size_t k = 1; k < s.size(); ++k) iso.terms.emplace_back(1, Parity::Even, s[k]);
  return iso;
}

}  // namespace

Cochain TruncatedDeformation::term(int i) const {
  const Index n = algebra.dim();
  if (i == 0) return {2, Parity::Even, algebra.structure()};
  if (i < 0 || i > order()) return {2, Parity::Even, MatrixQ::Zero(n, n * n)};
  return terms[static_cast<std::size_t>(i - 1)];
}

TruncatedDeformation zero_deformation(const LeibnizSuperalgebra& alg, int order) {
  const Index n = alg.dim();
  return {alg, std::vector<Cochain>(static_cast<std::size_t>(order), Cochain(2, Parity::Even, MatrixQ::Zero(n, n * n)))};
}

FormalIsomorphism identity_isomorphism(const LeibnizSuperalgebra& alg, int order) {
  const Index n = alg.dim();
  return {std::vector<Cochain>(static_cast<std::size_t>(order), Cochain(1, Parity::Even, MatrixQ::Zero(n, n)))};
}

Cochain deformation_residual(const TruncatedDeformation& d, int r) {
  check_deformation_terms(d);
  if (r < 0 || r > 2 * d.order())
    throw std::out_of_range("deformation_residual: order " + std::to_string(r) + " outside [0, " +
                            std::to_string(2 * d.order()) + "]");
  const Index n = d.algebra.dim();
  Cochain out(3, Parity::Even, MatrixQ::Zero(n, n * n * n));
  accumulate_residual(d, r, [](int, int) { return true; }, out.coeffs());
  return out;
}

Cochain obstruction(const TruncatedDeformation& d, int r) {
  check_deformation_terms(d);
  const Index n = d.algebra.dim();
  Cochain out(3, Parity::Even, MatrixQ::Zero(n, n * n * n));
  accumulate_residual(d, r, [](int i, int j) { return i >= 1 && j >= 1; }, out.coeffs());
  return -out;
}

DeformationReport check_deformation(const TruncatedDeformation& d, CheckMode mode) {
  const int last = mode == CheckMode::Strict ? 2 * d.order() : d.order();
  const Index n = d.algebra.dim();
  for (int r = 1; r <= last; ++r) {
    const Cochain res = deformation_residual(d, r);
    for (Index t = 0; t < res.coeffs().cols(); ++t) {
      if (is_exactly_zero(res.coeffs().col(t))) continue;
      return {r, DeformationFailure{r, t / (n * n), (t / n) % n, t % n, res.coeffs().col(t)}};
    }
  }
  return {last, std::nullopt};
}

std::optional<Infinitesimal> infinitesimal(const TruncatedDeformation& d) {
  for (int i = 1; i <= d.order(); ++i)
    if (!d.terms[static_cast<std::size_t>(i - 1)].is_zero()) return Infinitesimal{i, d.terms[static_cast<std::size_t>(i - 1)]};
  return std::nullopt;
}

std::optional<Cochain> extend_deformation(const TruncatedDeformation& d, int r, const ComplexOptions& options) {
  check_deformation_terms(d);
  if (r < 1) throw std::out_of_range("extend_deformation: target order must be at least 1");
  if (d.order() < r - 1)
    throw DeformationError("extend_deformation: need terms through order " + std::to_string(r - 1), d.order() + 1);

  TruncatedDeformation head{d.algebra, std::vector<Cochain>(d.terms.begin(), d.terms.begin() + (r - 1))};
  for (int s = 1; s < r; ++s)
    if (!deformation_residual(head, s).is_zero())
      throw DeformationError("extend_deformation: deformation equation fails at order " + std::to_string(s), s);

  // R_r = -δ²μ_r - R'_r, so the new term must satisfy δ²μ_r = -R'_r.
  const SuperBimodule adj = adjoint_module(d.algebra);
  const Cochain rhs = -obstruction(head, r);
  const CochainBasisIndex src(adj, 2, Parity::Even);
  const CochainBasisIndex dst(adj, 3, Parity::Even);
  const auto x = solve(delta_matrix(adj, 2, Parity::Even, options), dst.coordinates(rhs));
  if (!x) return std::nullopt;

  Cochain mu = src.cochain(*x);
  head.terms.push_back(mu);
  if (!deformation_residual(head, r).is_zero())
    throw std::logic_error("extend_deformation: solved term does not cancel the order-" + std::to_string(r) +
                           " residual");
  return mu;
}

FormalIsomorphism inverse(const FormalIsomorphism& iso) {
  if (iso.terms.empty()) return iso;
  const Index n = iso.terms.front().coeffs().rows();
  const auto psi = series(iso, n);
  std::vector<MatrixQ> phi{MatrixQ::Identity(n, n)};
  for (std::size_t k = 1; k < psi.size(); ++k) {
    MatrixQ next = MatrixQ::Zero(n, n);
    for (std::size_t i = 1; i <= k; ++i) next -= psi[i] * phi[k - i];
    phi.push_back(std::move(next));
  }
  return from_series(phi);
}

FormalIsomorphism compose(const FormalIsomorphism& outer, const FormalIsomorphism& inner) {
  if (outer.order() != inner.order()) throw std::invalid_argument("compose: orders differ");
  if (outer.terms.empty()) return outer;
  const Index n = outer.terms.front().coeffs().rows();
  const auto a = series(outer, n);
  const auto b = series(inner, n);
  std::vector<MatrixQ> c;
  for (std::size_t k = 0; k < a.size(); ++k) {
    MatrixQ sum = MatrixQ::Zero(n, n);
    for (std::size_t i = 0; i <= k; ++i) sum += a[i] * b[k - i];
    c.push_back(std::move(sum));
  }
  return from_series(c);
}

TruncatedDeformation transform(const TruncatedDeformation& d, const FormalIsomorphism& iso) {
  check_deformation_terms(d);
  if (iso.order() != d.order()) throw std::invalid_argument("transform: deformation and isomorphism orders differ");
  for (const auto& psi : iso.terms) check_term(d.algebra, psi, 1, "isomorphism term");
  const Index n = d.algebra.dim();
  const int order = d.order();
  const auto psi = series(iso, n);
  const auto phi = series(inverse(iso), n);

  TruncatedDeformation out{d.algebra, {}};
  for (int k = 1; k <= order; ++k) {
    MatrixQ sum = MatrixQ::Zero(n, n * n);
    for (int l = 0; l <= k; ++l)
      for (int m = 0; l + m <= k; ++m) {
        const MatrixQ args = Eigen::kroneckerProduct(phi[static_cast<std::size_t>(l)], phi[static_cast<std::size_t>(m)]);
        for (int j = 0; j + l + m <= k; ++j) {
          const int i = k - j - l - m;
          const MatrixQ mu = d.term(j).coeffs();
          if (is_exactly_zero(mu)) continue;
          sum += psi[static_cast<std::size_t>(i)] * (mu * args);
        }
      }
    out.terms.emplace_back(2, Parity::Even, std::move(sum));
  }
  return out;
}

std::optional<FormalIsomorphism> equivalent_deformations(const TruncatedDeformation& d1,
                                                         const TruncatedDeformation& d2,
                                                         const ComplexOptions& options) {
  if (!(d1.algebra == d2.algebra)) throw std::invalid_argument("equivalent_deformations: different algebras");
  if (d1.order() != d2.order()) throw std::invalid_argument("equivalent_deformations: orders differ");
  for (const auto* d : {&d1, &d2}) {
    const auto report = check_deformation(*d, CheckMode::Jet);
    if (!report.passed())
      throw DeformationError("equivalent_deformations: input is not a deformation at order " +
                                 std::to_string(report.failure->order),
                             report.failure->order);
  }

  const Index n = d1.algebra.dim();
  const int order = d1.order();
  const SuperBimodule adj = adjoint_module(d1.algebra);
  const CochainBasisIndex src(adj, 1, Parity::Even);
  const CochainBasisIndex dst(adj, 2, Parity::Even);
  const MatrixQ d1_matrix = delta_matrix(adj, 1, Parity::Even, options);
  const MatrixQ derivation_coords = kernel_basis(d1_matrix);

  // Ψ ∘ exp(t^s D) for a derivation D of the bracket
  auto shifted = [&](const std::vector<MatrixQ>& psi, const MatrixQ& der, int s) {
    std::vector<MatrixQ> e(psi.size(), MatrixQ::Zero(n, n));
    e[0] = MatrixQ::Identity(n, n);
    MatrixQ power = MatrixQ::Identity(n, n);
    Rational factorial(1);
    for (int j = 1; static_cast<std::size_t>(j * s) < psi.size(); ++j) {
      power = power * der;
      factorial *= j;
      e[static_cast<std::size_t>(j * s)] = power / factorial;
    }
    return series(compose(from_series(psi), from_series(e)), n);
  };
  auto truncated = [](const TruncatedDeformation& d, int r) {
    return TruncatedDeformation{d.algebra, {d.terms.begin(), d.terms.begin() + r}};
  };

  std::vector<MatrixQ> psi{MatrixQ::Identity(n, n)};
  for (int r = 1; r <= order; ++r) {
    const TruncatedDeformation a = truncated(d1, r), b = truncated(d2, r);
    psi.push_back(MatrixQ::Zero(n, n));
    auto defect = [&](const std::vector<MatrixQ>& s) {
      return dst.coordinates(transform(a, from_series(s)).term(r) - b.term(r));
    };
    const VectorQ base = defect(psi);

    // Adding t^r χ changes order r by -δχ. Replacing Ψ by Ψ∘exp(t^{r-1}D)
    // leaves lower orders alone and moves order r affinely in D.
    const Index derivs = r >= 2 ? derivation_coords.cols() : 0;
    MatrixQ system(d1_matrix.rows(), d1_matrix.cols() + derivs);
    system.leftCols(d1_matrix.cols()) = d1_matrix;
    std::vector<MatrixQ> ders;
    for (Index k = 0; k < derivs; ++k) {
      ders.push_back(src.cochain(derivation_coords.col(k)).coeffs());
      system.col(d1_matrix.cols() + k) = base - defect(shifted(psi, ders.back(), r - 1));
    }
    const auto x = solve(system, base);
    if (!x) return std::nullopt;

    MatrixQ der = MatrixQ::Zero(n, n);
    for (Index k = 0; k < derivs; ++k) der += (*x)(d1_matrix.cols() + k) * ders[static_cast<std::size_t>(k)];
    if (!is_exactly_zero(der)) psi = shifted(psi, der, r - 1);
    psi.back() += src.cochain(x->head(d1_matrix.cols())).coeffs();
  }

  FormalIsomorphism iso = from_series(psi);
  const auto image = transform(d1, iso);
  for (int k = 1; k <= order; ++k)
    if (!(image.term(k) == d2.term(k)))
      throw std::logic_error("equivalent_deformations: recovered isomorphism fails at order " + std::to_string(k));
  return iso;
}

InfinitesimalRelation infinitesimal_relation(const TruncatedDeformation& d1, const TruncatedDeformation& d2,
                                             const FormalIsomorphism& iso) {
  if (iso.order() < 1) throw std::invalid_argument("infinitesimal_relation: isomorphism has no ψ_1");
  const SuperBimodule adj = adjoint_module(d1.algebra);
  return {d1.term(1) - d2.term(1), delta(adj, iso.terms.front())};
}

}  // namespace superleibniz
