#ifndef PETRUSKA_GEOMETRY_RATIONAL_H_
#define PETRUSKA_GEOMETRY_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace petruska::geom {

// Exact rational. GMP keeps every value in lowest terms with a positive
// denominator, so equality is structural.
using Rat = mpq_class;

Rat make_rat(long numerator, long denominator = 1);

// Parses decimal integer strings for numerator and denominator. Throws
// petruska::Error on malformed input or a zero denominator.
Rat parse_rat(std::string_view numerator, std::string_view denominator);

// Accepts "p", "-p" or "p/q".
Rat parse_rat(std::string_view text);

std::string numerator_string(const Rat& r);
std::string denominator_string(const Rat& r);
std::string to_string(const Rat& r);

// Nearest rational with the given denominator (ties away from zero).
Rat round_to_denominator(double value, long denominator);

inline int sign(const Rat& r) { return sgn(r); }

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace petruska::geom

#endif  // PETRUSKA_GEOMETRY_RATIONAL_H_
