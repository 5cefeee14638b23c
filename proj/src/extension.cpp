#include "superleibniz/extension.hpp"

#include <stdexcept>

#include "superleibniz/exact_linalg.hpp"

namespace superleibniz {

Extension build_extension(const SuperBimodule& mod, const Cochain& h) {
  if (h.arity() != 2 || h.degree() != Parity::Even)
    throw std::invalid_argument("build_extension: the cocycle must be an even 2-cochain");
  const auto& alg = mod.algebra();
  const Index nl = alg.dim();
  const Index nm = mod.dim();
  if (h.coeffs().rows() != nm || h.coeffs().cols() != nl * nl)
    throw std::invalid_argument("build_extension: cocycle does not match the module");

  std::vector<BasisElement> basis;
  for (const auto& b : alg.space().basis()) basis.push_back({"L." + b.label, b.parity});
  for (const auto& b : mod.space().basis()) basis.push_back({"M." + b.label, b.parity});
  const Index n = nl + nm;

  MatrixQ structure = MatrixQ::Zero(n, n * n);
  for (Index x = 0; x < nl; ++x) {
    for (Index y = 0; y < nl; ++y) {
      structure.col(x * n + y).head(nl) = alg.bracket(x, y);
      structure.col(x * n + y).tail(nm) = h.coeffs().col(x * nl + y);
    }
    for (Index m = 0; m < nm; ++m) {
      structure.col(x * n + nl + m).tail(nm) = mod.left_operator(x).col(m);
      structure.col((nl + m) * n + x).tail(nm) = mod.right_operator(x).col(m);
    }
  }
  SuperSpace space("E(" + alg.space().name() + ";" + mod.space().name() + ")", std::move(basis));
  return {mod, LeibnizSuperalgebra(std::move(space), std::move(structure)), h};
}

std::string_view to_string(ExtensionViolation::Kind kind) {
  switch (kind) {
    case ExtensionViolation::Kind::LeftInclusion: return "left-inclusion";
    case ExtensionViolation::Kind::RightInclusion: return "right-inclusion";
    case ExtensionViolation::Kind::AbelianFiber: return "abelian-fiber";
    case ExtensionViolation::Kind::Projection: return "projection";
  }
  return "unknown";
}

ExtensionReport check_extension(const Extension& e) {
  using Kind = ExtensionViolation::Kind;
  ExtensionReport report;
  const auto& alg = e.base();
  const auto& mod = e.coefficients;
  const Index nl = alg.dim();
  const Index nm = mod.dim();
  const Index n = nl + nm;
  if (e.total.dim() != n) throw std::invalid_argument("check_extension: total algebra has the wrong dimension");

  auto record = [&](Kind kind, Index u, Index v, VectorQ defect) {
    if (!is_exactly_zero(defect)) report.violations.push_back({kind, u, v, std::move(defect)});
  };
  auto fiber = [&](const VectorQ& m) {
    VectorQ out = VectorQ::Zero(n);
    out.tail(nm) = m;
    return out;
  };

  for (Index x = 0; x < nl; ++x)
    for (Index m = 0; m < nm; ++m) {
      record(Kind::LeftInclusion, x, nl + m, e.total.bracket(x, nl + m) - fiber(mod.left_operator(x).col(m)));
      record(Kind::RightInclusion, nl + m, x, e.total.bracket(nl + m, x) - fiber(mod.right_operator(x).col(m)));
    }
  for (Index m = 0; m < nm; ++m)
    for (Index k = 0; k < nm; ++k) record(Kind::AbelianFiber, nl + m, nl + k, e.total.bracket(nl + m, nl + k));

  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      VectorQ expected = VectorQ::Zero(nl);
      if (u < nl && v < nl) expected = alg.bracket(u, v);
      record(Kind::Projection, u, v, e.total.bracket(u, v).head(nl) - expected);
    }

  report.grading = check_grading(e.total);
  report.leibniz = check_leibniz(e.total);
  return report;
}

MatrixQ extension_morphism(const SuperBimodule& mod, const Cochain& f) {
  const Index nl = mod.algebra().dim();
  const Index nm = mod.dim();
  MatrixQ psi = MatrixQ::Identity(nl + nm, nl + nm);
  psi.bottomLeftCorner(nm, nl) = f.coeffs();
  return psi;
}

bool is_algebra_morphism(const LeibnizSuperalgebra& from, const LeibnizSuperalgebra& to, const MatrixQ& map) {
  const Index n = from.dim();
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      const VectorQ lhs = map * from.bracket(u, v);
      const VectorQ rhs = bracket_eval(to, map.col(u), map.col(v));
      if (lhs != rhs) return false;
    }
  return true;
}

std::optional<Cochain> extensions_equivalent(const Extension& e1, const Extension& e2) {
  if (!(e1.coefficients == e2.coefficients))
    throw std::invalid_argument("extensions_equivalent: extensions of different (L, M)");
  const auto& mod = e1.coefficients;
  auto f = is_coboundary(mod, e1.cocycle - e2.cocycle);
  if (!f) return std::nullopt;

  const MatrixQ psi = extension_morphism(mod, *f);
  if (!is_algebra_morphism(e1.total, e2.total, psi))
    throw std::logic_error("extensions_equivalent: δf = h1 - h2 but ψ is not multiplicative");
  return f;
}

std::vector<Extension> classify_extensions(const SuperBimodule& mod, const ComplexOptions& options) {
  const auto table = cohomology_table(mod, 2, /*with_bases=*/true, options);
  const auto& h2 = table.at(2, Parity::Even);
  const CochainBasisIndex idx(mod, 2, Parity::Even);
  std::vector<Extension> out;
  for (Index c = 0; c < h2.cohomology_basis->cols(); ++c)
    out.push_back(build_extension(mod, idx.cochain(h2.cohomology_basis->col(c))));
  return out;
}

}  // namespace superleibniz
