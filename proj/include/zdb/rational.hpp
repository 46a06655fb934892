#ifndef ZDB_RATIONAL_HPP
#define ZDB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace zdb {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction, always kept in canonical form (positive denominator,
// gcd(|num|, den) = 1). cpp_rational maintains the canonical form after
// every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(unsigned k) { return BigInt(1) << k; }

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

inline int sign(const Rational& x) { return x.sign(); }

// Parses "a/b" or a plain integer. Decimal input is rejected: exact
// operations must receive exact rationals.
inline Rational parse_rational(const std::string& text) {
  if (text.find('.') != std::string::npos)
    throw std::invalid_argument(
        "decimal input not accepted for exact values; write num/den, e.g. 1/8");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / den;  // normalizes a negative denominator
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("cannot parse rational: " + text);
  }
}

inline std::string fraction_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

// Decimal annotation, 15 significant digits. Annotations only; never fed
// back into exact computations.
inline std::string decimal_string(const Rational& x, int sig_digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", sig_digits, to_double(x));
  return buf;
}

inline BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = isqrt_floor(n);
  return root * root == n;
}

// Exact square root when it exists in Q (numerator and denominator both
// perfect squares).
inline bool exact_sqrt(const Rational& x, Rational& out) {
  if (x < 0) return false;
  BigInt rn, rd;
  if (!is_perfect_square(numerator(x), rn)) return false;
  if (!is_perfect_square(denominator(x), rd)) return false;
  out = Rational(rn, rd);
  return true;
}

inline Rational pow_int(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (e < 0) {
    if (x == 0) throw std::domain_error("0 raised to negative power");
    return Rational(1) / pow_int(x, -e);
  }
  Rational base = x, acc = 1;
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// Dyadic enclosure of x^(1/n), n >= 1, x >= 0, of width <= `width`.
// Returns an exact point enclosure when the root is rational.
struct RationalEnclosure {
  Rational lo, hi;
  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

inline RationalEnclosure nth_root_enclosure(const Rational& x, unsigned n,
                                            const Rational& width) {
  if (x < 0) throw std::domain_error("nth root of negative");
  if (n == 0) throw std::domain_error("0th root");
  if (x == 0 || x == 1 || n == 1) return {x, x};
  // Exact case: both parts perfect n-th powers.
  {
    BigInt rn = 1, rd = 1;
    bool ok = true;
    for (auto [part, out] : {std::pair{numerator(x), &rn},
                             std::pair{denominator(x), &rd}}) {
      BigInt lo = 0, hi = part + 1;
      while (lo + 1 < hi) {  // integer n-th root by bisection
        BigInt mid = (lo + hi) / 2;
        BigInt p = 1;
        for (unsigned i = 0; i < n && p <= part; ++i) p *= mid;
        (p <= part ? lo : hi) = mid;
      }
      BigInt p = 1;
      for (unsigned i = 0; i < n; ++i) p *= lo;
      if (p != part) { ok = false; break; }
      *out = lo;
    }
    if (ok) {
      Rational r(rn, rd);
      return {r, r};
    }
  }
  Rational lo = 0, hi = x < 1 ? Rational(1) : x;
  while (hi - lo > width) {
    const Rational mid = (lo + hi) / 2;
    (pow_int(mid, n) <= x ? lo : hi) = mid;
  }
  return {lo, hi};
}

}  // namespace zdb

#endif  // ZDB_RATIONAL_HPP
