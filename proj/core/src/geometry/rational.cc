#include "petruska/geometry/rational.h"

#include <cctype>
#include <cmath>

#include "petruska/error.h"

namespace petruska::geom {
namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw Error("malformed integer literal '" + std::string(s) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return mpz_class(digits, 10);
}

}  // namespace

Rat make_rat(long numerator, long denominator) {
  if (denominator == 0) throw Error("zero denominator");
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view numerator, std::string_view denominator) {
  mpz_class num = parse_integer(numerator);
  mpz_class den = parse_integer(denominator);
  if (den == 0) throw Error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_rat(text, "1");
  return parse_rat(text.substr(0, slash), text.substr(slash + 1));
}

std::string numerator_string(const Rat& r) { return r.get_num().get_str(); }

std::string denominator_string(const Rat& r) { return r.get_den().get_str(); }

std::string to_string(const Rat& r) { return r.get_str(); }

Rat round_to_denominator(double value, long denominator) {
  if (denominator <= 0) throw Error("denominator must be positive");
  if (!std::isfinite(value)) throw Error("cannot round a non-finite value");
  double scaled = std::round(value * static_cast<double>(denominator));
  mpz_class num(scaled);
  Rat r(num, mpz_class(denominator));
  r.canonicalize();
  return r;
}

}  // namespace petruska::geom
