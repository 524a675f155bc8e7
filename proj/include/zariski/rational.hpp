#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "zariski/errors.hpp"
#include "zariski/integer.hpp"

namespace zariski {

/// Exact rational number, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) fail(ErrorKind::ZeroInput, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline const Int& numer(const Rational& r) { return r.get_num(); }
inline const Int& denom(const Rational& r) { return r.get_den(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Serializes as "p/q" or "p"; sign on the numerator only.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Strict parser for the "p" / "p/q" / "-p/q" format.
inline Rational parse_rational(std::string_view s) {
  auto bad = [&]() -> Rational { fail(ErrorKind::ParseError, "bad rational '" + std::string(s) + "'"); };
  if (s.empty()) return bad();
  size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
  if (digits == 0) return bad();
  if (i < s.size()) {
    if (s[i] != '/') return bad();
    ++i;
    size_t d2 = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++d2; }
    if (d2 == 0 || i != s.size()) return bad();
  }
  Rational r;
  if (r.set_str(std::string(s), 10) != 0) return bad();
  if (r.get_den() == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

/// r^e with e any integer (e < 0 requires r != 0).
inline Rational pow_rational(const Rational& r, long e) {
  if (e == 0) return Rational(1);
  if (r == 0 && e < 0) fail(ErrorKind::ZeroInput, "0 to a negative power");
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  Int n = int_pow(numer(r), a);
  Int d = int_pow(denom(r), a);
  return e > 0 ? make_rational(n, d) : make_rational(d, n);
}

inline Int floor_rational(const Rational& r) { return div_floor(numer(r), denom(r)); }

/// Representative of r mod 1 in [0, 1).
inline Rational frac_mod1(const Rational& r) {
  Rational f = r - Rational(floor_rational(r));
  return f;
}

}  // namespace zariski
