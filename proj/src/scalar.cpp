#include "superleibniz/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace superleibniz {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                               : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw std::invalid_argument("not an exact rational: \"" + std::string(text) + "\"");
  using boost::multiprecision::mpz_int;
  const mpz_int n(std::string{num});
  const mpz_int d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator: \"" + std::string(text) + "\"");
  // Construction from numerator/denominator canonicalises.
  return Rational(n, d);
}

std::string format_rational(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace superleibniz
