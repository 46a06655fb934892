#ifndef ZDB_BOUND_EXPR_HPP
#define ZDB_BOUND_EXPR_HPP

#include <stdexcept>
#include <string>
#include <variant>

#include "zdb/interval.hpp"
#include "zdb/rational.hpp"

namespace zdb {

// Default isolation width for certified enclosures (irrational crossovers,
// power-law evaluation).
inline Rational default_enclosure_width() {
  return Rational(1, BigInt("1000000000000"));  // 10^-12
}

// (a0 + a1*eta) / (b0 + b1*eta), exact at rational eta away from the pole.
struct LinearFractional {
  Rational a0, a1, b0, b1;

  Rational denominator_at(const Rational& eta) const { return b0 + b1 * eta; }

  Rational eval(const Rational& eta) const {
    const Rational den = denominator_at(eta);
    if (den == 0)
      throw std::domain_error("linear-fractional bound evaluated at its pole");
    return (a0 + a1 * eta) / den;
  }

  // Sign of the derivative numerator a1*b0 - a0*b1; the derivative keeps
  // this sign on any interval avoiding the pole.
  int derivative_sign() const { return sign(a1 * b0 - a0 * b1); }

  bool has_pole_in(const Interval& iv) const {
    if (b1 == 0) return b0 == 0;
    const Rational pole = -b0 / b1;
    return iv.contains(pole);
  }

  bool operator==(const LinearFractional&) const = default;

  std::string repr() const {
    return "(" + fraction_string(a0) + " + " + fraction_string(a1) +
           "*eta)/(" + fraction_string(b0) + " + " + fraction_string(b1) +
           "*eta)";
  }
};

inline LinearFractional lf_constant(const Rational& c) {
  return {c, 0, 1, 0};
}

// c * eta^p with rational exponent p. Evaluates to a certified enclosure;
// exact only when eta^p happens to be rational.
struct PowerLaw {
  Rational c, p;

  RationalEnclosure eval_enclosure(const Rational& eta,
                                   const Rational& width) const {
    if (eta <= 0)
      throw std::domain_error("power-law bound requires eta > 0");
    const BigInt pn = numerator(p), pd = denominator(p);
    if (pd > 1000 || pn > 1000 || pn < -1000)
      throw std::domain_error("power-law exponent out of supported range");
    const long n = pn.convert_to<long>();
    const unsigned d = pd.convert_to<unsigned>();
    Rational base = pow_int(eta, n >= 0 ? n : -n);
    if (n < 0) base = 1 / base;
    // Relative slack on the root keeps the final width under control for
    // the c * (.)^(1/d) scaling.
    Rational w = width / (1 + abs(c));
    if (w <= 0) w = default_enclosure_width();
    RationalEnclosure root = nth_root_enclosure(base, d, w);
    RationalEnclosure out{c * root.lo, c * root.hi};
    if (out.lo > out.hi) std::swap(out.lo, out.hi);
    return out;
  }

  bool operator==(const PowerLaw&) const = default;

  std::string repr() const {
    return fraction_string(c) + "*eta^(" + fraction_string(p) + ")";
  }
};

using BoundExpr = std::variant<LinearFractional, PowerLaw>;

inline std::string expr_repr(const BoundExpr& e) {
  return std::visit([](const auto& x) { return x.repr(); }, e);
}

inline bool expr_is_exact(const BoundExpr& e) {
  return std::holds_alternative<LinearFractional>(e);
}

// Enclosure of the expression value; a point enclosure for the
// linear-fractional form.
inline RationalEnclosure eval_enclosure(const BoundExpr& e, const Rational& eta,
                                        const Rational& width) {
  if (const auto* lf = std::get_if<LinearFractional>(&e)) {
    const Rational v = lf->eval(eta);
    return {v, v};
  }
  return std::get<PowerLaw>(e).eval_enclosure(eta, width);
}

inline Rational eval_exact(const BoundExpr& e, const Rational& eta) {
  if (const auto* lf = std::get_if<LinearFractional>(&e)) return lf->eval(eta);
  throw std::logic_error("exact evaluation requested for a power-law bound");
}

// -1, 0, +1 for nonincreasing / constant / nondecreasing on the interval.
// Throws if the interval straddles a pole.
inline int monotone_direction(const BoundExpr& e, const Interval& iv) {
  if (const auto* lf = std::get_if<LinearFractional>(&e)) {
    if (lf->has_pole_in(iv))
      throw std::domain_error("bound has a pole inside the interval");
    // Derivative is (a1*b0 - a0*b1) over a squared denominator.
    return lf->derivative_sign();
  }
  const auto& pl = std::get<PowerLaw>(e);
  return sign(pl.c) * sign(pl.p);
}

}  // namespace zdb

#endif  // ZDB_BOUND_EXPR_HPP
