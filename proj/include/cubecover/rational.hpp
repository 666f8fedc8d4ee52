#ifndef CUBECOVER_RATIONAL_HPP
#define CUBECOVER_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace cubecover {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

struct BadRational : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational from integer numerator and denominator, canonical form
/// (gcd-reduced, positive denominator) regardless of input signs.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw BadRational("zero denominator");
  return Rational(num) / Rational(den);
}

/// Parses "p/q" or "p". The result is canonical even if the input is not.
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    throw BadRational("cannot parse rational: " + s);
  }
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string format_rational(const Rational& r) { return r.str(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Largest integer <= r.
inline Integer floor_int(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline Integer ceil_int(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (r > 0 && q * denominator(r) != numerator(r)) ++q;
  return q;
}

/// Nearest integer, ties rounded up.
inline Integer round_half_up(const Rational& r) {
  return floor_int(r + Rational(1, 2));
}

inline Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// b^k for integer k (negative exponents allowed, b != 0).
inline Rational pow_rat(const Rational& b, long k) {
  if (b == 0) throw BadRational("pow_rat: zero base");
  Rational base = k < 0 ? Rational(1) / b : b;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

}  // namespace cubecover

#endif
