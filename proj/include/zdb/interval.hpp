#ifndef ZDB_INTERVAL_HPP
#define ZDB_INTERVAL_HPP

#include <string>

#include "zdb/rational.hpp"

namespace zdb {

// Rational interval with per-endpoint closedness. The eta domain is
// (0, 1/2]; validity intervals of bound records are subsets of it.
struct Interval {
  Rational lo, hi;
  bool lo_closed = false;
  bool hi_closed = true;

  static Interval open(const Rational& a, const Rational& b) {
    return {a, b, false, false};
  }
  static Interval open_closed(const Rational& a, const Rational& b) {
    return {a, b, false, true};
  }
  static Interval closed(const Rational& a, const Rational& b) {
    return {a, b, true, true};
  }
  static Interval empty_interval() { return {0, 0, false, false}; }

  bool empty() const {
    if (lo > hi) return true;
    if (lo == hi) return !(lo_closed && hi_closed);
    return false;
  }

  bool contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
  }

  Rational midpoint() const { return (lo + hi) / 2; }

  Interval intersect(const Interval& other) const {
    Interval r;
    if (lo > other.lo) { r.lo = lo; r.lo_closed = lo_closed; }
    else if (lo < other.lo) { r.lo = other.lo; r.lo_closed = other.lo_closed; }
    else { r.lo = lo; r.lo_closed = lo_closed && other.lo_closed; }
    if (hi < other.hi) { r.hi = hi; r.hi_closed = hi_closed; }
    else if (hi > other.hi) { r.hi = other.hi; r.hi_closed = other.hi_closed; }
    else { r.hi = hi; r.hi_closed = hi_closed && other.hi_closed; }
    return r;
  }

  bool operator==(const Interval& o) const {
    if (empty() && o.empty()) return true;
    return lo == o.lo && hi == o.hi && lo_closed == o.lo_closed &&
           hi_closed == o.hi_closed;
  }

  std::string str() const {
    if (empty()) return "(empty)";
    return std::string(lo_closed ? "[" : "(") + fraction_string(lo) + ", " +
           fraction_string(hi) + (hi_closed ? "]" : ")");
  }
};

inline Interval eta_domain() { return Interval::open_closed(0, Rational(1, 2)); }

}  // namespace zdb

#endif  // ZDB_INTERVAL_HPP
