#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lieder {

// Exact arithmetic scalars. mpq_class keeps values in lowest terms with a
// positive denominator as long as every value passes through canonicalize()
// once; all construction in this library goes through the helpers below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }

inline Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_rational_literal(const std::string& s) {
  // -?[0-9]+(/[0-9]+)?
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  return digits > 0 && i == s.size();
}

// Parses "p" or "p/q" with q > 0. Throws std::invalid_argument otherwise.
inline Rational parse_rational(const std::string& s) {
  if (!is_rational_literal(s))
    throw std::invalid_argument("not a rational literal: '" + s + "'");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer den(s.substr(slash + 1));
    if (den == 0)
      throw std::invalid_argument("rational with zero denominator: '" + s + "'");
  }
  Rational r(s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer factorial(unsigned long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace lieder
