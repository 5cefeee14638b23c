#include "superleibniz/superalgebra.hpp"

#include <stdexcept>
#include <string>

namespace superleibniz {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Coordinates of [e_i, v] for a vector v, from a structure-style table
// whose column i*n + j is [e_i, e_j].
VectorQ bracket_basis_vec(const MatrixQ& table, Index n, Index i, const VectorQ& v) {
  VectorQ out = VectorQ::Zero(table.rows());
  for (Index j = 0; j < n; ++j)
    if (v(j) != 0) out += v(j) * table.col(i * n + j);
  return out;
}

VectorQ bracket_vec_basis(const MatrixQ& table, Index n, const VectorQ& v, Index j) {
  VectorQ out = VectorQ::Zero(table.rows());
  for (Index i = 0; i < n; ++i)
    if (v(i) != 0) out += v(i) * table.col(i * n + j);
  return out;
}

}  // namespace

LeibnizSuperalgebra::LeibnizSuperalgebra(SuperSpace space, MatrixQ structure)
    : space_(std::move(space)), structure_(std::move(structure)) {
  require(structure_.rows() == dim() && structure_.cols() == dim() * dim(),
          "structure matrix must be dim x dim^2");
}

VectorQ bracket_eval(const LeibnizSuperalgebra& alg, const VectorQ& a, const VectorQ& b) {
  const Index n = alg.dim();
  require(a.size() == n && b.size() == n, "bracket_eval: vector length does not match the algebra");
  VectorQ out = VectorQ::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (a(i) == 0) continue;
    for (Index j = 0; j < n; ++j)
      if (b(j) != 0) out += (a(i) * b(j)) * alg.bracket(i, j);
  }
  return out;
}

LeibnizSuperalgebra abelian(Index p, Index q) {
  std::vector<BasisElement> basis;
  for (Index i = 1; i <= p; ++i) basis.push_back({"u" + std::to_string(i), Parity::Even});
  for (Index i = 1; i <= q; ++i) basis.push_back({"v" + std::to_string(i), Parity::Odd});
  const Index n = p + q;
  return {SuperSpace("abelian(" + std::to_string(p) + "|" + std::to_string(q) + ")", std::move(basis)),
          MatrixQ::Zero(n, n * n)};
}

LeibnizSuperalgebra paper_example() {
  SuperSpace space("example", {{"x", Parity::Even}, {"y", Parity::Even}, {"z", Parity::Odd}});
  MatrixQ c = MatrixQ::Zero(3, 9);
  constexpr Index x = 0, y = 1;
  c(x, y * 3 + x) = 1;  // [y,x] = x
  c(x, y * 3 + y) = 1;  // [y,y] = x
  return {std::move(space), std::move(c)};
}

SuperBimodule::SuperBimodule(LeibnizSuperalgebra algebra, SuperSpace space, MatrixQ left, MatrixQ right)
    : algebra_(std::move(algebra)), space_(std::move(space)), left_(std::move(left)), right_(std::move(right)) {
  const Index cols = algebra_.dim() * dim();
  require(left_.rows() == dim() && left_.cols() == cols, "left action table must be dimM x dimL*dimM");
  require(right_.rows() == dim() && right_.cols() == cols, "right action table must be dimM x dimL*dimM");
}

VectorQ left_act(const SuperBimodule& mod, const VectorQ& a, const VectorQ& m) {
  require(a.size() == mod.algebra().dim() && m.size() == mod.dim(), "left_act: size mismatch");
  VectorQ out = VectorQ::Zero(mod.dim());
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) out += a(i) * (mod.left_operator(i) * m);
  return out;
}

VectorQ right_act(const SuperBimodule& mod, const VectorQ& m, const VectorQ& a) {
  require(a.size() == mod.algebra().dim() && m.size() == mod.dim(), "right_act: size mismatch");
  VectorQ out = VectorQ::Zero(mod.dim());
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != 0) out += a(i) * (mod.right_operator(i) * m);
  return out;
}

SuperBimodule adjoint_module(const LeibnizSuperalgebra& alg) {
  const Index n = alg.dim();
  MatrixQ right(n, n * n);
  for (Index a = 0; a < n; ++a)
    for (Index m = 0; m < n; ++m) right.col(a * n + m) = alg.bracket(m, a);
  return {alg, alg.space(), alg.structure(), std::move(right)};
}

SuperBimodule zero_module(const LeibnizSuperalgebra& alg, SuperSpace space) {
  const Index cols = alg.dim() * space.dim();
  const Index rows = space.dim();
  return {alg, std::move(space), MatrixQ::Zero(rows, cols), MatrixQ::Zero(rows, cols)};
}

SuperBimodule zero_module(const LeibnizSuperalgebra& alg) { return zero_module(alg, alg.space()); }

CheckReport<GradingViolation> check_grading(const LeibnizSuperalgebra& alg) {
  CheckReport<GradingViolation> report;
  const Index n = alg.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (alg.bracket(i, j)(k) != 0 && alg.parity(k) != alg.parity(i) + alg.parity(j))
          report.failures.push_back({i, j, k});
  return report;
}

CheckReport<LeibnizDefect> check_leibniz(const LeibnizSuperalgebra& alg) {
  CheckReport<LeibnizDefect> report;
  const Index n = alg.dim();
  const MatrixQ& t = alg.structure();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        VectorQ defect = bracket_vec_basis(t, n, alg.bracket(a, b), c);
        defect -= bracket_basis_vec(t, n, a, alg.bracket(b, c));
        defect += koszul_sign(alg.parity(a), alg.parity(b)) * bracket_basis_vec(t, n, b, alg.bracket(a, c));
        if (!is_exactly_zero(defect)) report.failures.push_back({a, b, c, std::move(defect)});
      }
  return report;
}

bool is_lie(const LeibnizSuperalgebra& alg) {
  const Index n = alg.dim();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const VectorQ sum = alg.bracket(a, b) + koszul_sign(alg.parity(a), alg.parity(b)) * alg.bracket(b, a);
      if (!is_exactly_zero(sum)) return false;
    }
  return true;
}

CheckReport<ModuleDefect> check_module(const SuperBimodule& mod) {
  CheckReport<ModuleDefect> report;
  const auto& alg = mod.algebra();
  const Index nl = alg.dim();
  const Index nm = mod.dim();

  for (Index a = 0; a < nl; ++a)
    for (Index m = 0; m < nm; ++m)
      for (Index k = 0; k < nm; ++k) {
        const Parity expected = alg.parity(a) + mod.parity(m);
        if (mod.parity(k) == expected) continue;
        if (mod.left_operator(a)(k, m) != 0) report.failures.push_back({0, {a, m, k}, VectorQ{}});
        if (mod.right_operator(a)(k, m) != 0) report.failures.push_back({0, {m, a, k}, VectorQ{}});
      }

  auto lact = [&](Index a, const VectorQ& v) -> VectorQ { return mod.left_operator(a) * v; };
  auto ract = [&](const VectorQ& v, Index a) -> VectorQ { return mod.right_operator(a) * v; };
  auto lact_vec = [&](const VectorQ& x, Index m) -> VectorQ {
    VectorQ out = VectorQ::Zero(nm);
    for (Index i = 0; i < nl; ++i)
      if (x(i) != 0) out += x(i) * mod.left_operator(i).col(m);
    return out;
  };
  auto ract_vec = [&](Index m, const VectorQ& x) -> VectorQ {
    VectorQ out = VectorQ::Zero(nm);
    for (Index i = 0; i < nl; ++i)
      if (x(i) != 0) out += x(i) * mod.right_operator(i).col(m);
    return out;
  };

  for (Index a = 0; a < nl; ++a)
    for (Index b = 0; b < nl; ++b)
      for (Index m = 0; m < nm; ++m) {
        const VectorQ em = unit_vector(nm, m);
        const int s_ab = koszul_sign(alg.parity(a), alg.parity(b));
        const int s_am = koszul_sign(alg.parity(a), mod.parity(m));

        // [[a,b],m] = [a,[b,m]] - (-1)^{ab} [b,[a,m]]
        VectorQ d1 = lact_vec(alg.bracket(a, b), m) - lact(a, lact(b, em)) + s_ab * lact(b, lact(a, em));
        if (!is_exactly_zero(d1)) report.failures.push_back({1, {a, b, m}, std::move(d1)});

        // [[a,m],b] = [a,[m,b]] - (-1)^{am} [m,[a,b]]
        VectorQ d2 = ract(lact(a, em), b) - lact(a, ract(em, b)) + s_am * ract_vec(m, alg.bracket(a, b));
        if (!is_exactly_zero(d2)) report.failures.push_back({2, {a, m, b}, std::move(d2)});

        // [[m,a],b] = [m,[a,b]] - (-1)^{ma} [a,[m,b]]
        VectorQ d3 = ract(ract(em, a), b) - ract_vec(m, alg.bracket(a, b)) + s_am * lact(a, ract(em, b));
        if (!is_exactly_zero(d3)) report.failures.push_back({3, {m, a, b}, std::move(d3)});
      }
  return report;
}

}  // namespace superleibniz
