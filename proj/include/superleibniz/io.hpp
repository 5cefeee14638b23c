#ifndef SUPERLEIBNIZ_IO_HPP
#define SUPERLEIBNIZ_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "superleibniz/deformation.hpp"

namespace superleibniz {

using Json = nlohmann::json;

/**
 * Malformed or inconsistent input document. For syntax errors line and
 * column (both 1-based) locate the offending character; for semantic errors
 * they are 0 and `where` holds a path such as "brackets[2].value[0].coeff".
 */
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, std::string where, std::size_t line = 0, std::size_t column = 0);

  const std::string& where() const { return where_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string where_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses text, converting syntax errors to FormatError with line/column.
Json parse_document(std::string_view text, std::string_view source = "<input>");
/// Reads and parses a file; an unreadable file is a FormatError too.
Json load_document(const std::filesystem::path& path);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& doc);

/// Exact rational from a JSON string ("3", "-1/2") or integer; floats throw.
Rational rational_from_json(const Json& value, const std::string& where);
Json rational_to_json(const Rational& value);

/// {"name", "basis": [{"label","parity"}], "brackets": [{"left","right","value":[{"label","coeff"}]}]}
LeibnizSuperalgebra algebra_from_json(const Json& doc);
Json algebra_to_json(const LeibnizSuperalgebra& alg);

/// {"name", "basis", "left": [{"algebra","module","value"}], "right": [{"module","algebra","value"}]}
SuperBimodule module_from_json(const LeibnizSuperalgebra& alg, const Json& doc);
Json module_to_json(const SuperBimodule& mod);

/// {"arity", "degree", "entries": [{"args": [labels], "value": [{"label","coeff"}]}]}.
/// Homogeneity is validated against the module.
Cochain cochain_from_json(const SuperBimodule& mod, const Json& doc);
Json cochain_to_json(const SuperBimodule& mod, const Cochain& f);

/// {"order": N, "terms": [{"power": p, "cochain": {...}}]}; omitted powers are zero.
TruncatedDeformation deformation_from_json(const LeibnizSuperalgebra& alg, const Json& doc);
Json deformation_to_json(const TruncatedDeformation& d);

/// Same layout as a deformation file with arity-1 cochains.
FormalIsomorphism isomorphism_from_json(const LeibnizSuperalgebra& alg, const Json& doc);
Json isomorphism_to_json(const LeibnizSuperalgebra& alg, const FormalIsomorphism& iso);

/// [{"label", "coeff"}] in basis order, omitting zeros.
Json vector_to_json(const SuperSpace& space, const VectorQ& v);

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_IO_HPP
