#include <catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace superleibniz;
using fixtures::e;

TEST_CASE("super spaces") {
  const SuperSpace s("S", {{"a", Parity::Even}, {"b", Parity::Odd}, {"c", Parity::Odd}});
  CHECK(s.even_dim() == 1);
  CHECK(s.odd_dim() == 2);
  CHECK(*s.index_of("c") == 2);
  CHECK_FALSE(s.index_of("d"));
  CHECK(s.parity_of(unit_vector(3, 1)) == Parity::Odd);
  CHECK(s.parity_of(VectorQ::Zero(3)) == Parity::Even);
  CHECK_FALSE(s.parity_of(VectorQ::Ones(3)));
  CHECK_THROWS_AS(SuperSpace("S", {{"a", Parity::Even}, {"a", Parity::Odd}}), std::invalid_argument);
  CHECK_THROWS_AS(SuperSpace("S", {{"", Parity::Even}}), std::invalid_argument);
}

TEST_CASE("parity arithmetic") {
  CHECK(Parity::Odd + Parity::Odd == Parity::Even);
  CHECK(koszul_sign(Parity::Odd, Parity::Odd) == -1);
  CHECK(koszul_sign(Parity::Odd, Parity::Even) == 1);
  CHECK(sign_of_power(3) == -1);
  CHECK(sign_of_power(-2) == 1);
}

TEST_CASE("bracket_eval on the three-dimensional example") {
  const auto alg = paper_example();
  CHECK(bracket_eval(alg, e(alg, "y"), e(alg, "x")) == e(alg, "x"));
  CHECK(bracket_eval(alg, VectorQ::Zero(3), e(alg, "y")) == VectorQ::Zero(3));
  CHECK(bracket_eval(alg, e(alg, "y"), VectorQ(e(alg, "y") + e(alg, "z"))) == e(alg, "x"));
  CHECK_THROWS_AS(bracket_eval(alg, VectorQ::Zero(2), e(alg, "y")), std::invalid_argument);
}

TEST_CASE("grading checks") {
  const auto alg = paper_example();
  CHECK(check_grading(alg).passed());
  CHECK(check_grading(abelian(2, 3)).passed());

  MatrixQ s = alg.structure();
  s(2, 2 * 3 + 2) = 1;  // [z,z] = z
  const auto bad = check_grading(LeibnizSuperalgebra(alg.space(), s));
  REQUIRE(bad.failures.size() == 1);
  CHECK(bad.failures[0] == GradingViolation{2, 2, 2});
}

TEST_CASE("Leibniz identity checks") {
  CHECK(check_leibniz(paper_example()).passed());
  CHECK(check_leibniz(abelian(2, 2)).passed());

  // 2-dim even: [y,x] = x, [x,y] = x
  const SuperSpace space("B", {{"x", Parity::Even}, {"y", Parity::Even}});
  MatrixQ s = MatrixQ::Zero(2, 4);
  s(0, 1 * 2 + 0) = 1;
  s(0, 0 * 2 + 1) = 1;
  const auto report = check_leibniz(LeibnizSuperalgebra(space, s));
  CHECK_FALSE(report.passed());
  // Exhaustive hand expansion: (x,y,y) is the only failing triple, with
  // defect [[x,y],y] + [y,[x,y]] = 2x; (y,x,y) gives x - x + 0 = 0.
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].a == 0);
  CHECK(report.failures[0].b == 1);
  CHECK(report.failures[0].c == 1);
  CHECK(report.failures[0].defect == (VectorQ(2) << 2, 0).finished());
}

TEST_CASE("is_lie") {
  CHECK_FALSE(is_lie(paper_example()));
  CHECK(is_lie(abelian(1, 2)));
  const auto gl = from_associative(fixtures::matrices_1_1(), MatrixQ::Identity(4, 4));
  CHECK(is_lie(gl));
  CHECK(check_leibniz(gl).passed());
}

TEST_CASE("for Lie algebras Leibniz defects equal graded Jacobi defects") {
  const auto gl = from_associative(fixtures::matrices_1_1(), MatrixQ::Identity(4, 4));
  const Index n = gl.dim();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        const VectorQ ea = unit_vector(n, a), eb = unit_vector(n, b), ec = unit_vector(n, c);
        const Parity pa = gl.parity(a), pb = gl.parity(b), pc = gl.parity(c);
        // (-1)^{ac}[a,[b,c]] + (-1)^{ba}[b,[c,a]] + (-1)^{cb}[c,[a,b]]
        const VectorQ jacobi = koszul_sign(pa, pc) * bracket_eval(gl, ea, bracket_eval(gl, eb, ec)) +
                               koszul_sign(pb, pa) * bracket_eval(gl, eb, bracket_eval(gl, ec, ea)) +
                               koszul_sign(pc, pb) * bracket_eval(gl, ec, bracket_eval(gl, ea, eb));
        CHECK(is_exactly_zero(jacobi));
      }
}

TEST_CASE("module checks") {
  const auto alg = paper_example();
  const auto adj = adjoint_module(alg);
  CHECK(check_module(adj).passed());
  CHECK(adj.left_operator(1).col(0) == e(alg, "x"));
  CHECK(check_module(zero_module(alg, SuperSpace("W", {{"w", Parity::Odd}}))).passed());
  CHECK(is_exactly_zero(adjoint_module(abelian(1, 1)).left()));

  // Negating the left action leaves axiom 1 intact on this algebra since
  // [[a,b],m] = 0 throughout; axioms 2 and 3 catch it.
  const SuperBimodule negated(alg, alg.space(), -adj.left(), adj.right());
  const auto report = check_module(negated);
  CHECK_FALSE(report.passed());
  for (const auto& d : report.failures) CHECK(d.axiom != 1);

  const auto gl = from_associative(fixtures::matrices_1_1(), MatrixQ::Identity(4, 4));
  const auto gadj = adjoint_module(gl);
  const auto gl_report = check_module(SuperBimodule(gl, gl.space(), -gadj.left(), gadj.right()));
  bool axiom1 = false;
  for (const auto& d : gl_report.failures) axiom1 = axiom1 || d.axiom == 1;
  CHECK(axiom1);
}

TEST_CASE("every algebra is a module over itself on all fixtures") {
  for (const auto& [name, alg] : fixtures::algebras()) {
    INFO(name);
    CHECK(check_grading(alg).passed());
    CHECK(check_leibniz(alg).passed());
    CHECK(check_module(adjoint_module(alg)).passed());
    CHECK(check_module(zero_module(alg)).passed());
  }
}

TEST_CASE("abelian algebras") {
  const auto a = abelian(1, 1);
  CHECK(a.dim() == 2);
  CHECK(is_exactly_zero(a.structure()));
  CHECK(abelian(0, 0).dim() == 0);
  CHECK(check_leibniz(abelian(0, 0)).passed());
}

TEST_CASE("from_associative") {
  using fixtures::upper_triangular;
  // T = Id on a 2-dim even commutative algebra K x K gives a Lie algebra.
  const SuperSpace kk("KxK", {{"e1", Parity::Even}, {"e2", Parity::Even}});
  MatrixQ prod = MatrixQ::Zero(2, 4);
  prod(0, 0) = 1;
  prod(1, 3) = 1;
  const AssociativeSuperalgebra k2{kk, prod};
  CHECK(is_lie(from_associative(k2, MatrixQ::Identity(2, 2))));

  const auto zero = from_associative(upper_triangular(), MatrixQ::Zero(3, 3));
  CHECK(is_exactly_zero(zero.structure()));

  // Projection onto K e1, an idempotent algebra map.
  MatrixQ p = MatrixQ::Zero(2, 2);
  p(0, 0) = 1;
  CHECK(check_leibniz(from_associative(k2, p)).passed());

  const auto ut = from_associative(upper_triangular(), fixtures::diagonal_projection());
  CHECK(check_grading(ut).passed());
  CHECK(check_leibniz(ut).passed());
  CHECK_FALSE(is_lie(ut));

  // T = transpose-like swap E11 <-> E22 is not compatible with the product.
  MatrixQ swap = MatrixQ::Zero(3, 3);
  swap(2, 0) = 1;
  swap(0, 2) = 1;
  CHECK_THROWS_AS(from_associative(upper_triangular(), swap), std::invalid_argument);
  // An odd-degree T is rejected.
  MatrixQ odd = MatrixQ::Zero(3, 3);
  odd(1, 0) = 1;
  CHECK_THROWS_AS(from_associative(upper_triangular(), odd), std::invalid_argument);
}

TEST_CASE("free truncated Leibniz superalgebras") {
  const auto even = free_truncated(SuperSpace("V", {{"v", Parity::Even}}), 2);
  REQUIRE(even.dim() == 2);
  CHECK(even.label(1) == "v.v");
  CHECK(even.bracket(0, 0) == unit_vector(2, 1));
  CHECK(is_exactly_zero(even.bracket(1, 0)));
  CHECK(is_exactly_zero(even.bracket(0, 1)));
  CHECK(is_exactly_zero(even.bracket(1, 1)));
  CHECK(check_leibniz(even).passed());

  const auto one = free_truncated(SuperSpace("V", {{"a", Parity::Even}, {"b", Parity::Odd}}), 1);
  CHECK(is_exactly_zero(one.structure()));

  const auto odd = free_truncated(SuperSpace("V", {{"w", Parity::Odd}}), 3);
  CHECK(odd.dim() == 3);
  CHECK(check_grading(odd).passed());
  CHECK(check_leibniz(odd).passed());

  const auto two = free_truncated(SuperSpace("V", {{"a", Parity::Even}, {"b", Parity::Odd}}), 3);
  CHECK(two.dim() == 14);
  CHECK(check_grading(two).passed());
  CHECK(check_leibniz(two).passed());
}
