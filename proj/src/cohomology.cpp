#include "superleibniz/cohomology.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "superleibniz/exact_linalg.hpp"

namespace superleibniz {

namespace {

void check_cap(const SuperBimodule& mod, int arity, const ComplexOptions& options) {
  if (arity <= options.max_arity) return;
  throw ArityCapError("cochain arity " + std::to_string(arity) + " exceeds the cap " +
                      std::to_string(options.max_arity) + "; dim C^" + std::to_string(arity) +
                      " = dim M * (dim L)^" + std::to_string(arity) + " = " + std::to_string(mod.dim()) + " * " +
                      std::to_string(mod.algebra().dim()) + "^" + std::to_string(arity) + " = " +
                      std::to_string(cochain_space_dim(mod, arity)));
}

// Fills the rows of δ^n that belong to output tuples [first, last).
void assemble_rows(const SuperBimodule& mod, int n, Parity parity, const CochainBasisIndex& src,
                   const CochainBasisIndex& dst, Index first, Index last, MatrixQ& out) {
  const auto& alg = mod.algebra();
  const Index nl = alg.dim();
  const Index nm = mod.dim();

  // Adds `coeff * op(k_out, k_in)` for every module pair, or `coeff` on the
  // diagonal when op is absent.
  auto add_block = [&](Index t_out, Index t_in, const Rational& coeff, const MatrixQ* op) {
    for (Index k_out = 0; k_out < nm; ++k_out) {
      const Index row = dst.position(t_out * nm + k_out);
      if (row < 0) continue;
      if (op == nullptr) {
        const Index col = src.position(t_in * nm + k_out);
        if (col >= 0) out(row, col) += coeff;
        continue;
      }
      for (Index k_in = 0; k_in < nm; ++k_in) {
        const Rational& v = (*op)(k_out, k_in);
        if (v == 0) continue;
        const Index col = src.position(t_in * nm + k_in);
        if (col >= 0) out(row, col) += coeff * v;
      }
    }
  };

  std::vector<MatrixQ> left(static_cast<std::size_t>(nl));
  std::vector<MatrixQ> right(static_cast<std::size_t>(nl));
  for (Index a = 0; a < nl; ++a) {
    left[static_cast<std::size_t>(a)] = mod.left_operator(a);
    right[static_cast<std::size_t>(a)] = mod.right_operator(a);
  }

  if (n == 0) {
    for (Index a = first; a < last; ++a) add_block(a, 0, Rational(-1), &right[static_cast<std::size_t>(a)]);
    return;
  }

  std::vector<Index> input(static_cast<std::size_t>(n));
  for (Index t = first; t < last; ++t) {
    const auto x = decode_tuple(t, nl, n + 1);
    auto parity_at = [&](int k) { return alg.parity(x[static_cast<std::size_t>(k)]); };
    auto drop = [&](int skip) {
      std::size_t w = 0;
      for (int k = 0; k <= n; ++k)
        if (k != skip) input[w++] = x[static_cast<std::size_t>(k)];
    };

    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        Parity between = Parity::Even;
        for (int k = i + 1; k < j; ++k) between += parity_at(k);
        const int sign = sign_of_power(i + 1) * koszul_sign(parity_at(i), between);
        const auto br = alg.bracket(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
        drop(i);
        for (Index c = 0; c < nl; ++c) {
          if (br(c) == 0) continue;
          input[static_cast<std::size_t>(j - 1)] = c;
          add_block(t, encode_tuple(input, nl), sign * br(c), nullptr);
        }
      }
    // The pair (i = n, j > n) is empty, so the loop above stops at i = n - 1.

    Parity prefix = Parity::Even;
    for (int i = 0; i < n; ++i) {
      const int sign = sign_of_power(i + 2) * koszul_sign(parity_at(i), parity + prefix);
      prefix += parity_at(i);
      drop(i);
      add_block(t, encode_tuple(input, nl), Rational(sign), &left[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])]);
    }

    drop(n);
    add_block(t, encode_tuple(input, nl), Rational(sign_of_power(n + 1)),
              &right[static_cast<std::size_t>(x[static_cast<std::size_t>(n)])]);
  }
}

MatrixQ columns_of(const std::vector<VectorQ>& vs, Index rows) {
  MatrixQ m(rows, static_cast<Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) m.col(static_cast<Index>(i)) = vs[i];
  return m;
}

}  // namespace

CochainBasisIndex::CochainBasisIndex(const SuperBimodule& mod, int arity, Parity degree)
    : arity_(arity), degree_(degree), module_dim_(mod.dim()), tuples_(tuple_count(mod.algebra().dim(), arity)) {
  const auto& lspace = mod.algebra().space();
  position_.assign(static_cast<std::size_t>(tuples_ * module_dim_), -1);
  for (Index t = 0; t < tuples_; ++t) {
    const Parity pt = lspace.parity_sum(decode_tuple(t, lspace.dim(), arity));
    for (Index k = 0; k < module_dim_; ++k) {
      if (mod.parity(k) + pt != degree) continue;
      const Index flat = t * module_dim_ + k;
      position_[static_cast<std::size_t>(flat)] = static_cast<Index>(flat_.size());
      flat_.push_back(flat);
    }
  }
}

VectorQ CochainBasisIndex::coordinates(const Cochain& f) const {
  if (f.arity() != arity_ || f.degree() != degree_)
    throw std::invalid_argument("cochain does not belong to this cochain space");
  const VectorQ all = flatten(f);
  VectorQ out(size());
  for (Index i = 0; i < size(); ++i) out(i) = all(flat_[static_cast<std::size_t>(i)]);
  return out;
}

Cochain CochainBasisIndex::cochain(const VectorQ& coords) const {
  if (coords.size() != size()) throw std::invalid_argument("coordinate vector has the wrong length");
  VectorQ all = VectorQ::Zero(tuples_ * module_dim_);
  for (Index i = 0; i < size(); ++i) all(flat_[static_cast<std::size_t>(i)]) = coords(i);
  return {arity_, degree_, all.reshaped(module_dim_, tuples_)};
}

Index cochain_space_dim(const SuperBimodule& mod, int arity) {
  return mod.dim() * tuple_count(mod.algebra().dim(), arity);
}

MatrixQ delta_matrix(const SuperBimodule& mod, int n, Parity parity, const ComplexOptions& options) {
  if (n < 0) throw std::invalid_argument("delta_matrix: negative arity");
  check_cap(mod, n + 1, options);
  const CochainBasisIndex src(mod, n, parity);
  const CochainBasisIndex dst(mod, n + 1, parity);
  MatrixQ out = MatrixQ::Zero(dst.size(), src.size());

  const Index tuples = tuple_count(mod.algebra().dim(), n + 1);
  const Index workers = std::clamp<Index>(options.threads, 1, std::max<Index>(tuples, 1));
  if (workers == 1) {
    assemble_rows(mod, n, parity, src, dst, 0, tuples, out);
    return out;
  }
  // Each output tuple owns a disjoint set of rows.
  std::vector<std::jthread> pool;
  const Index chunk = (tuples + workers - 1) / workers;
  for (Index w = 0; w < workers; ++w) {
    const Index first = w * chunk;
    const Index last = std::min(tuples, first + chunk);
    if (first >= last) break;
    pool.emplace_back([&, first, last] { assemble_rows(mod, n, parity, src, dst, first, last, out); });
  }
  return out;
}

const CohomologyEntry& CohomologyTable::at(int arity, Parity parity) const {
  for (const auto& e : entries_)
    if (e.arity == arity && e.parity == parity) return e;
  throw std::out_of_range("cohomology table has no entry for arity " + std::to_string(arity));
}

int CohomologyTable::max_arity() const {
  int m = -1;
  for (const auto& e : entries_) m = std::max(m, e.arity);
  return m;
}

CohomologyTable cohomology_table(const SuperBimodule& mod, int max_n, bool with_bases, const ComplexOptions& options) {
  if (max_n < 0) throw std::invalid_argument("cohomology_table: max_n must be nonnegative");
  check_cap(mod, max_n + 1, options);
  std::vector<CohomologyEntry> entries;
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    MatrixQ previous;  // δ^{n-1}
    for (int n = 0; n <= max_n; ++n) {
      const MatrixQ d = delta_matrix(mod, n, parity, options);
      CohomologyEntry e{n, parity, d.cols(), 0, 0, 0, std::nullopt, std::nullopt, std::nullopt};
      e.cocycles = d.cols() - rank(d);
      e.coboundaries = n == 0 ? 0 : rank(previous);
      e.cohomology = e.cocycles - e.coboundaries;
      if (with_bases) {
        const MatrixQ z = canonical_span(kernel_basis(d));
        const MatrixQ b = n == 0 ? MatrixQ(d.cols(), 0) : canonical_span(previous);
        std::vector<VectorQ> chosen;
        MatrixQ span = b;
        for (Index c = 0; c < z.cols(); ++c) {
          MatrixQ trial(span.rows(), span.cols() + 1);
          trial << span, z.col(c);
          if (rank(trial) > span.cols()) {
            span = std::move(trial);
            chosen.push_back(z.col(c));
          }
        }
        e.cocycle_basis = z;
        e.coboundary_basis = b;
        e.cohomology_basis = columns_of(chosen, d.cols());
      }
      entries.push_back(std::move(e));
      previous = d;
    }
  }
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.arity != b.arity ? a.arity < b.arity : a.parity < b.parity;
  });
  return CohomologyTable(std::move(entries));
}

MatrixQ annihilator(const SuperBimodule& mod) {
  const Index nl = mod.algebra().dim();
  const Index nm = mod.dim();
  std::vector<Index> even;
  for (Index k = 0; k < nm; ++k)
    if (mod.parity(k) == Parity::Even) even.push_back(k);

  // Rows (x, k'): coefficient of m_{k'} in [m, e_x].
  MatrixQ system(nl * nm, static_cast<Index>(even.size()));
  for (std::size_t c = 0; c < even.size(); ++c)
    for (Index x = 0; x < nl; ++x) system.block(x * nm, static_cast<Index>(c), nm, 1) = mod.right_operator(x).col(even[c]);

  const MatrixQ kernel = canonical_span(kernel_basis(system));
  MatrixQ out = MatrixQ::Zero(nm, kernel.cols());
  for (std::size_t c = 0; c < even.size(); ++c) out.row(even[c]) = kernel.row(static_cast<Index>(c));
  return out;
}

std::vector<Cochain> derivations(const SuperBimodule& mod, Parity parity) {
  const CochainBasisIndex idx(mod, 1, parity);
  const MatrixQ basis = canonical_span(kernel_basis(delta_matrix(mod, 1, parity)));
  std::vector<Cochain> out;
  for (Index c = 0; c < basis.cols(); ++c) out.push_back(idx.cochain(basis.col(c)));
  return out;
}

std::vector<Cochain> inner_derivations(const SuperBimodule& mod) {
  const Index nl = mod.algebra().dim();
  const CochainBasisIndex idx(mod, 1, Parity::Even);
  std::vector<VectorQ> maps;
  for (Index m = 0; m < mod.dim(); ++m) {
    if (mod.parity(m) != Parity::Even) continue;
    Cochain f = zero_cochain(mod, 1, Parity::Even);
    for (Index x = 0; x < nl; ++x) f.coeffs().col(x) = mod.right_operator(x).col(m);
    maps.push_back(idx.coordinates(f));
  }
  const MatrixQ basis = canonical_span(columns_of(maps, idx.size()));
  std::vector<Cochain> out;
  for (Index c = 0; c < basis.cols(); ++c) out.push_back(idx.cochain(basis.col(c)));
  return out;
}

std::optional<Cochain> is_coboundary(const SuperBimodule& mod, const Cochain& f, const ComplexOptions& options) {
  if (f.arity() < 1) throw std::invalid_argument("is_coboundary: arity 0 cochains are never coboundaries");
  if (!is_homogeneous(mod, f)) throw std::invalid_argument("is_coboundary: cochain is not homogeneous");
  const CochainBasisIndex src(mod, f.arity() - 1, f.degree());
  const CochainBasisIndex dst(mod, f.arity(), f.degree());
  const auto x = solve(delta_matrix(mod, f.arity() - 1, f.degree(), options), dst.coordinates(f));
  if (!x) return std::nullopt;
  return src.cochain(*x);
}

}  // namespace superleibniz
