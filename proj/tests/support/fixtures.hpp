#ifndef SUPERLEIBNIZ_TESTS_FIXTURES_HPP
#define SUPERLEIBNIZ_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "superleibniz/io.hpp"
#include "superleibniz/random.hpp"

namespace fixtures {

using namespace superleibniz;

inline MatrixQ zeros(Index rows, Index cols) { return MatrixQ::Zero(rows, cols); }

/// Upper triangular 2x2 matrices graded as in M(1|1): E11, E22 even, E12 odd.
inline AssociativeSuperalgebra upper_triangular() {
  SuperSpace space("T(1|1)", {{"E11", Parity::Even}, {"E12", Parity::Odd}, {"E22", Parity::Even}});
  MatrixQ product = zeros(3, 9);
  auto set = [&](Index i, Index j, Index k) { product(k, i * 3 + j) = 1; };
  set(0, 0, 0);  // E11 E11 = E11
  set(0, 1, 1);  // E11 E12 = E12
  set(1, 2, 1);  // E12 E22 = E12
  set(2, 2, 2);  // E22 E22 = E22
  return {space, product};
}

/// Projection onto the diagonal, an idempotent algebra map.
inline MatrixQ diagonal_projection() {
  MatrixQ t = zeros(3, 3);
  t(0, 0) = 1;
  t(2, 2) = 1;
  return t;
}

/// gl(1|1) as an associative superalgebra: E11, E22 even, E12, E21 odd.
inline AssociativeSuperalgebra matrices_1_1() {
  SuperSpace space("M(1|1)", {{"E11", Parity::Even}, {"E12", Parity::Odd}, {"E21", Parity::Odd}, {"E22", Parity::Even}});
  // E_ij E_kl = δ_jk E_il with index (i,j) -> 2(i-1) + (j-1)
  MatrixQ product = zeros(4, 16);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) product(2 * i + l, (2 * i + j) * 4 + (2 * j + l)) = 1;
  return {space, product};
}

struct NamedAlgebra {
  std::string name;
  LeibnizSuperalgebra algebra;
};

/// The fixture set used by the property tests.
inline std::vector<NamedAlgebra> algebras() {
  return {
      {"paper_example", paper_example()},
      {"abelian(1,1)", abelian(1, 1)},
      {"abelian(2,1)", abelian(2, 1)},
      {"free(even,2)", free_truncated(SuperSpace("V", {{"v", Parity::Even}}), 2)},
      {"free(odd,3)", free_truncated(SuperSpace("V", {{"w", Parity::Odd}}), 3)},
      {"upper_triangular_SL", from_associative(upper_triangular(), diagonal_projection())},
  };
}

struct NamedModule {
  std::string name;
  SuperBimodule module;
};

inline std::vector<NamedModule> modules(const LeibnizSuperalgebra& alg) {
  return {{"adjoint", adjoint_module(alg)}, {"zero", zero_module(alg)}};
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Json golden_cohomology() { return load_document(std::string(TEST_DATA_DIR) + "/golden_cohomology.json"); }

inline std::string fixture_path(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

/// Basis vector e_i of the algebra.
inline VectorQ e(const LeibnizSuperalgebra& alg, const std::string& label) {
  return unit_vector(alg.dim(), *alg.space().index_of(label));
}

/// Cochain with f(args) = value on a single tuple.
inline Cochain single_entry(const SuperBimodule& mod, std::vector<Index> tuple, Index k, const Rational& c) {
  Cochain f = basis_cochain(mod, tuple, k);
  f *= c;
  return f;
}

}  // namespace fixtures

#endif  // SUPERLEIBNIZ_TESTS_FIXTURES_HPP
