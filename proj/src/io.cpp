#include "superleibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace superleibniz {

FormatError::FormatError(const std::string& message, std::string where, std::size_t line, std::size_t column)
    : std::runtime_error(line > 0 ? where + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message
                                  : (where.empty() ? message : where + ": " + message)),
      where_(std::move(where)),
      line_(line),
      column_(column) {}

namespace {

std::string at(const std::string& where, std::string_view key) {
  return where.empty() ? std::string(key) : where + "." + std::string(key);
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

void expect_keys(const Json& obj, const std::string& where, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!obj.is_object()) throw FormatError("expected an object", where);
  for (auto key : required)
    if (!obj.contains(key)) throw FormatError("missing field \"" + std::string(key) + "\"", where);
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto k : required) known = known || k == key;
    for (auto k : optional) known = known || k == key;
    if (!known) throw FormatError("unknown field \"" + key + "\"", where);
  }
}

const Json& array_field(const Json& obj, std::string_view key, const std::string& where) {
  const Json& v = obj.at(std::string(key));
  if (!v.is_array()) throw FormatError("expected an array", at(where, key));
  return v;
}

std::string string_field(const Json& obj, std::string_view key, const std::string& where) {
  const Json& v = obj.at(std::string(key));
  if (!v.is_string()) throw FormatError("expected a string", at(where, key));
  return v.get<std::string>();
}

long integer_field(const Json& obj, std::string_view key, const std::string& where) {
  const Json& v = obj.at(std::string(key));
  if (!v.is_number_integer()) throw FormatError("expected an integer", at(where, key));
  return v.get<long>();
}

Parity parity_field(const Json& obj, std::string_view key, const std::string& where) {
  const std::string s = string_field(obj, key, where);
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw FormatError("parity must be \"even\" or \"odd\"", at(where, key));
}

Index label_index(const SuperSpace& space, const std::string& label, const std::string& where) {
  auto i = space.index_of(label);
  if (!i) throw FormatError("unknown label \"" + label + "\" in " + space.name(), where);
  return *i;
}

SuperSpace space_from_json(const Json& doc, const std::string& where) {
  const std::string name = string_field(doc, "name", where);
  const Json& basis = array_field(doc, "basis", where);
  std::vector<BasisElement> elements;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string w = at(at(where, "basis"), i);
    expect_keys(basis[i], w, {"label", "parity"});
    elements.push_back({string_field(basis[i], "label", w), parity_field(basis[i], "parity", w)});
  }
  try {
    return SuperSpace(name, std::move(elements));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what(), at(where, "basis"));
  }
}

Json space_to_json(const SuperSpace& space) {
  Json basis = Json::array();
  for (const auto& b : space.basis()) basis.push_back({{"label", b.label}, {"parity", std::string(to_string(b.parity))}});
  return basis;
}

VectorQ vector_from_json(const SuperSpace& space, const Json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError("expected an array", where);
  VectorQ v = VectorQ::Zero(space.dim());
  std::set<Index> seen;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string w = at(where, i);
    expect_keys(value[i], w, {"label", "coeff"});
    const Index k = label_index(space, string_field(value[i], "label", w), at(w, "label"));
    if (!seen.insert(k).second) throw FormatError("duplicate label \"" + space.label(k) + "\"", w);
    v(k) = rational_from_json(value[i].at("coeff"), at(w, "coeff"));
  }
  return v;
}

// Reads [{<a_key>, <b_key>, "value"}] into columns a*nb + b of a dim(target) x na*nb table.
MatrixQ table_from_json(const Json& list, const std::string& where, const SuperSpace& a_space, std::string_view a_key,
                        const SuperSpace& b_space, std::string_view b_key, const SuperSpace& target,
                        bool a_major = true) {
  if (!list.is_array()) throw FormatError("expected an array", where);
  const Index na = a_space.dim();
  const Index nb = b_space.dim();
  MatrixQ table = MatrixQ::Zero(target.dim(), na * nb);
  std::set<Index> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = at(where, i);
    expect_keys(list[i], w, {a_key, b_key, "value"});
    const Index a = label_index(a_space, string_field(list[i], a_key, w), at(w, a_key));
    const Index b = label_index(b_space, string_field(list[i], b_key, w), at(w, b_key));
    const Index col = a_major ? a * nb + b : b * na + a;
    if (!seen.insert(col).second)
      throw FormatError("duplicate entry (" + a_space.label(a) + ", " + b_space.label(b) + ")", w);
    table.col(col) = vector_from_json(target, list[i].at("value"), at(w, "value"));
  }
  return table;
}

Json table_to_json(const MatrixQ& table, const SuperSpace& a_space, std::string_view a_key, const SuperSpace& b_space,
                   std::string_view b_key, const SuperSpace& target, bool a_major = true) {
  Json out = Json::array();
  const Index na = a_space.dim();
  const Index nb = b_space.dim();
  // Entries follow the order of the first key in the document.
  const Index n_first = a_major ? na : nb;
  const Index n_second = a_major ? nb : na;
  for (Index p = 0; p < n_first; ++p)
    for (Index q = 0; q < n_second; ++q) {
      const Index a = a_major ? p : q;
      const Index b = a_major ? q : p;
      const auto col = table.col(a_major ? a * nb + b : b * na + a);
      if (is_exactly_zero(col)) continue;
      out.push_back({{std::string(a_key), a_space.label(a)},
                     {std::string(b_key), b_space.label(b)},
                     {"value", vector_to_json(target, col)}});
    }
  return out;
}

template <typename Series, typename Make>
Series series_from_json(const Json& doc, int arity, const SuperBimodule& adj, Make make) {
  expect_keys(doc, "", {"order", "terms"});
  const long order = integer_field(doc, "order", "");
  if (order < 0) throw FormatError("order must be nonnegative", "order");
  const Index n = adj.dim();
  std::vector<Cochain> terms(static_cast<std::size_t>(order),
                             Cochain(arity, Parity::Even, MatrixQ::Zero(n, tuple_count(n, arity))));
  const Json& list = array_field(doc, "terms", "");
  std::set<long> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = at("terms", i);
    expect_keys(list[i], w, {"power", "cochain"});
    const long p = integer_field(list[i], "power", w);
    if (p < 1 || p > order) throw FormatError("power outside 1.." + std::to_string(order), at(w, "power"));
    if (!seen.insert(p).second) throw FormatError("duplicate power " + std::to_string(p), w);
    Cochain f;
    try {
      f = cochain_from_json(adj, list[i].at("cochain"));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), at(w, "cochain"));
    }
    if (f.arity() != arity || f.degree() != Parity::Even)
      throw FormatError("expected an even " + std::to_string(arity) + "-cochain", at(w, "cochain"));
    terms[static_cast<std::size_t>(p - 1)] = std::move(f);
  }
  return make(std::move(terms));
}

Json series_to_json(const SuperBimodule& adj, const std::vector<Cochain>& terms) {
  Json list = Json::array();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].is_zero()) continue;
    list.push_back({{"power", static_cast<long>(i + 1)}, {"cochain", cochain_to_json(adj, terms[i])}});
  }
  return {{"order", static_cast<long>(terms.size())}, {"terms", list}};
}

}  // namespace

Json parse_document(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    if (auto pos = message.find("parse error"); pos != std::string::npos) message = message.substr(pos);
    throw FormatError(message, std::string(source), line, column);
  }
}

Json load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read file", path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), path.string());
}

std::string dump_canonical(const Json& doc) { return doc.dump(2) + "\n"; }

Rational rational_from_json(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return parse_rational(value.dump());
  if (value.is_number_float()) throw FormatError("floating-point coefficients are not accepted", where);
  if (!value.is_string()) throw FormatError("expected a rational string such as \"-1/2\"", where);
  try {
    return parse_rational(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what(), where);
  }
}

Json rational_to_json(const Rational& value) { return format_rational(value); }

Json vector_to_json(const SuperSpace& space, const VectorQ& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k)
    if (v(k) != 0) out.push_back({{"label", space.label(k)}, {"coeff", rational_to_json(v(k))}});
  return out;
}

LeibnizSuperalgebra algebra_from_json(const Json& doc) {
  expect_keys(doc, "", {"name", "basis", "brackets"});
  SuperSpace space = space_from_json(doc, "");
  MatrixQ structure = table_from_json(array_field(doc, "brackets", ""), "brackets", space, "left", space, "right", space);
  return {std::move(space), std::move(structure)};
}

Json algebra_to_json(const LeibnizSuperalgebra& alg) {
  const auto& s = alg.space();
  return {{"name", s.name()},
          {"basis", space_to_json(s)},
          {"brackets", table_to_json(alg.structure(), s, "left", s, "right", s)}};
}

SuperBimodule module_from_json(const LeibnizSuperalgebra& alg, const Json& doc) {
  expect_keys(doc, "", {"name", "basis"}, {"left", "right"});
  SuperSpace space = space_from_json(doc, "");
  const Index n = alg.dim() * space.dim();
  MatrixQ left = MatrixQ::Zero(space.dim(), n);
  MatrixQ right = MatrixQ::Zero(space.dim(), n);
  if (doc.contains("left"))
    left = table_from_json(doc.at("left"), "left", alg.space(), "algebra", space, "module", space);
  if (doc.contains("right"))
    right = table_from_json(doc.at("right"), "right", alg.space(), "algebra", space, "module", space, false);
  return {alg, std::move(space), std::move(left), std::move(right)};
}

Json module_to_json(const SuperBimodule& mod) {
  const auto& l = mod.algebra().space();
  const auto& m = mod.space();
  return {{"name", m.name()},
          {"basis", space_to_json(m)},
          {"left", table_to_json(mod.left(), l, "algebra", m, "module", m)},
          {"right", table_to_json(mod.right(), l, "algebra", m, "module", m, false)}};
}

Cochain cochain_from_json(const SuperBimodule& mod, const Json& doc) {
  expect_keys(doc, "", {"arity", "degree", "entries"});
  const long arity = integer_field(doc, "arity", "");
  if (arity < 0) throw FormatError("arity must be nonnegative", "arity");
  const Parity degree = parity_field(doc, "degree", "");
  const auto& alg = mod.algebra();
  const Index nl = alg.dim();
  MatrixQ coeffs = MatrixQ::Zero(mod.dim(), tuple_count(nl, static_cast<int>(arity)));
  const Json& entries = array_field(doc, "entries", "");
  std::set<Index> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string w = at("entries", i);
    expect_keys(entries[i], w, {"args", "value"});
    const Json& args = array_field(entries[i], "args", w);
    if (static_cast<long>(args.size()) != arity)
      throw FormatError("expected " + std::to_string(arity) + " arguments", at(w, "args"));
    std::vector<Index> tuple;
    Parity args_parity = Parity::Even;
    for (std::size_t k = 0; k < args.size(); ++k) {
      const std::string wk = at(at(w, "args"), k);
      if (!args[k].is_string()) throw FormatError("expected a label", wk);
      tuple.push_back(label_index(alg.space(), args[k].get<std::string>(), wk));
      args_parity += alg.parity(tuple.back());
    }
    const Index t = encode_tuple(tuple, nl);
    if (!seen.insert(t).second) throw FormatError("duplicate arguments", w);
    const VectorQ v = vector_from_json(mod.space(), entries[i].at("value"), at(w, "value"));
    for (Index k = 0; k < v.size(); ++k)
      if (v(k) != 0 && mod.parity(k) != degree + args_parity)
        throw FormatError("value " + mod.space().label(k) + " breaks homogeneity of degree " +
                              std::string(to_string(degree)),
                          at(w, "value"));
    coeffs.col(t) = v;
  }
  return {static_cast<int>(arity), degree, std::move(coeffs)};
}

Json cochain_to_json(const SuperBimodule& mod, const Cochain& f) {
  const auto& alg = mod.algebra();
  Json entries = Json::array();
  for (Index t = 0; t < f.coeffs().cols(); ++t) {
    if (is_exactly_zero(f.coeffs().col(t))) continue;
    Json args = Json::array();
    for (Index i : decode_tuple(t, alg.dim(), f.arity())) args.push_back(alg.label(i));
    entries.push_back({{"args", args}, {"value", vector_to_json(mod.space(), f.coeffs().col(t))}});
  }
  return {{"arity", f.arity()}, {"degree", std::string(to_string(f.degree()))}, {"entries", entries}};
}

TruncatedDeformation deformation_from_json(const LeibnizSuperalgebra& alg, const Json& doc) {
  return series_from_json<TruncatedDeformation>(doc, 2, adjoint_module(alg), [&](std::vector<Cochain> terms) {
    return TruncatedDeformation{alg, std::move(terms)};
  });
}

Json deformation_to_json(const TruncatedDeformation& d) { return series_to_json(adjoint_module(d.algebra), d.terms); }

FormalIsomorphism isomorphism_from_json(const LeibnizSuperalgebra& alg, const Json& doc) {
  return series_from_json<FormalIsomorphism>(doc, 1, adjoint_module(alg),
                                             [](std::vector<Cochain> terms) { return FormalIsomorphism{std::move(terms)}; });
}

Json isomorphism_to_json(const LeibnizSuperalgebra& alg, const FormalIsomorphism& iso) {
  return series_to_json(adjoint_module(alg), iso.terms);
}

}  // namespace superleibniz
