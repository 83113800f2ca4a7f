#include "barystrat/rational.hpp"

#include <cctype>

#include "barystrat/errors.hpp"

namespace barystrat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// cpp_int's string constructor treats a leading 0 as an octal prefix, so
// strip leading zeros first.
Integer from_digits(std::string_view digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Integer(0);
  return Integer(std::string(digits.substr(first)));
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(errc::bad_rational,
              "invalid rational '" + std::string(text) +
                  "' (expected \"p/q\" or a finite decimal, sign on the numerator only)");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  if (s.empty()) bad(text);

  std::size_t slash = s.find('/');
  std::size_t dot = s.find('.');
  if (slash != std::string_view::npos && dot != std::string_view::npos) bad(text);

  Integer num, den = 1;
  if (slash != std::string_view::npos) {
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = s.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) bad(text);
    num = from_digits(ns);
    den = from_digits(ds);
    if (den == 0) throw Error(errc::bad_rational, "invalid rational '" + std::string(text) + "' (zero denominator)");
  } else if (dot != std::string_view::npos) {
    std::string_view is = s.substr(0, dot);
    std::string_view fs = s.substr(dot + 1);
    if (!all_digits(is) || !all_digits(fs)) bad(text);
    num = from_digits(std::string(is) + std::string(fs));
    den = 1;
    for (std::size_t i = 0; i < fs.size(); ++i) den *= 10;
  } else {
    if (!all_digits(s)) bad(text);
    num = from_digits(s);
  }
  if (negative) num = -num;
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) {
    s += "/";
    s += denominator(value).str();
  }
  return s;
}

std::string decimal_approx(const Rational& value, unsigned max_frac_digits) {
  Integer num = numerator(value);
  const Integer& den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  Integer whole = num / den;
  Integer rem = num % den;
  std::string frac;
  for (unsigned i = 0; i < max_frac_digits && rem != 0; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + static_cast<unsigned>(Integer(rem / den)));
    rem %= den;
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();

  std::string s;
  if (negative && (whole != 0 || !frac.empty())) s += "-";
  s += whole.str();
  if (!frac.empty()) {
    s += ".";
    s += frac;
  }
  return s;
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Integer floor_int(const Rational& value) {
  Integer q = numerator(value) / denominator(value);
  if (value < 0 && q * denominator(value) != numerator(value)) q -= 1;
  return q;
}

Integer largest_int_below(const Rational& value) {
  if (is_integer(value)) return numerator(value) - 1;
  return floor_int(value);
}

}  // namespace barystrat
