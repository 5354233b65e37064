#ifndef TPTK_RATIONAL_HPP
#define TPTK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace tptk {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p/q", plain integers, and decimal/scientific literals ("3.41", "1e-4")
// into an exact rational. Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace tptk

#endif
