#ifndef LIEGROWTH_RATIONAL_HPP
#define LIEGROWTH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace liegrowth {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "3", "-1.25", "1e-12", "2.5e3" or "p/q" into an exact rational.
// Throws std::invalid_argument on malformed input.
Rat parse_decimal(const std::string& text);

// q^e for integer e (negative allowed; q must be nonzero then).
Rat rat_pow(const Rat& q, long e);

Int int_pow(const Int& base, unsigned long e);

// Canonical text for reals: 12 significant digits, "%.12g" style.
std::string format_real(double x);

std::string rat_to_string(const Rat& q);   // "p/q", or "p" when q == 1

double to_double(const Rat& q);

}  // namespace liegrowth

#endif
