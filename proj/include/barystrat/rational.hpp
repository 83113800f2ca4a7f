#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace barystrat {

// All parameters and decision quantities are exact rationals: every
// comparison in the selection rules is a strict inequality between
// rationals, so no floating point is allowed anywhere on a decision path.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q" (q > 0) or a finite decimal "d.ddd"; the sign, if any,
// belongs to the numerator. Throws Error(errc::bad_rational) otherwise.
Rational parse_rational(std::string_view text);

// Canonical form: lowest terms, positive denominator, "p" when the
// denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

// Truncated decimal expansion with at most `max_frac_digits` fractional
// digits, trailing zeros removed. Display only; never used in decisions.
std::string decimal_approx(const Rational& value, unsigned max_frac_digits = 6);

Integer floor_int(const Rational& value);
bool is_integer(const Rational& value);

// Largest integer strictly below `value` (so floor(value) unless value is
// itself an integer).
Integer largest_int_below(const Rational& value);

}  // namespace barystrat
