#ifndef ZDB_BOUND_RECORD_HPP
#define ZDB_BOUND_RECORD_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "zdb/bound_expr.hpp"
#include "zdb/interval.hpp"

namespace zdb {

// Named zero-density bound B(eta) with its validity interval in eta.
// Outside validity a record contributes +infinity to envelopes; it is
// never silently evaluated there.
struct BoundRecord {
  std::string name;
  BoundExpr expr;
  Interval validity;
  std::string citation;

  bool valid_at(const Rational& eta) const { return validity.contains(eta); }

  Rational eval(const Rational& eta) const {
    if (!valid_at(eta))
      throw std::domain_error("bound '" + name + "' evaluated outside its validity " +
                              validity.str());
    return eval_exact(expr, eta);
  }

  RationalEnclosure eval_enclosure_at(const Rational& eta,
                                      const Rational& width) const {
    if (!valid_at(eta))
      throw std::domain_error("bound '" + name + "' evaluated outside its validity " +
                              validity.str());
    return eval_enclosure(expr, eta, width);
  }
};

// The always-valid ceiling B(eta) <= 1/eta, from N(sigma,T) <= N(T).
inline BoundRecord trivial_ceiling() {
  return {"trivial", LinearFractional{1, 0, 0, 1}, eta_domain(),
          "trivial ceiling 1/eta from N(sigma,T) <= N(T) << T^{1+o(1)}"};
}

// Carlson: A(sigma) <= 4*sigma, i.e. B(eta) <= 4 - 4*eta.
inline BoundRecord carlson() {
  return {"carlson", LinearFractional{4, -4, 1, 0}, eta_domain(),
          "Carlson (1920): A(sigma) <= 4 sigma"};
}

// Ingham: A(sigma) <= 3/(2 - sigma), i.e. B(eta) <= 3/(1 + eta).
inline BoundRecord ingham() {
  return {"ingham", LinearFractional{3, 0, 1, 1}, eta_domain(),
          "Ingham (1940): A(sigma) <= 3/(2 - sigma)"};
}

// Huxley: A(sigma) <= 12/5 for sigma > 1/2.
inline BoundRecord huxley() {
  return {"huxley", lf_constant(Rational(12, 5)), eta_domain(),
          "Huxley (1972): A(sigma) <= 12/5"};
}

// Halasz--Turan: B(eta) <= 1.2*10^5 * eta^(1/2).
inline BoundRecord halasz_turan() {
  return {"halasz-turan", PowerLaw{120000, Rational(1, 2)}, eta_domain(),
          "Halasz--Turan (1969): B(eta) <= 1.2*10^5 eta^{1/2}"};
}

// B(eta) <= 1/(1 - 4*eta) for eta < 1/4 (the ell = 2 dyadic case).
inline BoundRecord corollary4() {
  return {"corollary4", LinearFractional{1, 0, 1, -4},
          Interval::open(0, Rational(1, 4)),
          "B(eta) <= 1/(1 - 4 eta) for eta < 1/4"};
}

// B(eta) <= 4/(5(1 - 8*eta)) for eta < 1/8 (the ell = 3 dyadic case).
inline BoundRecord corollary5() {
  return {"corollary5", LinearFractional{4, 0, 5, -40},
          Interval::open(0, Rational(1, 8)),
          "B(eta) <= 4/(5(1 - 8 eta)) for eta < 1/8"};
}

// B(eta) <= 3/(2(1 - 2*eta)) for eta < 1/2 (the ell = 1 case).
inline BoundRecord corollary6() {
  return {"corollary6", LinearFractional{3, 0, 2, -4},
          Interval::open(0, Rational(1, 2)),
          "B(eta) <= 3/(2(1 - 2 eta)) for eta < 1/2"};
}

// B(eta) <= 2/(1 - eta) (Montgomery, Theorem 12.1 (12.10)).
inline BoundRecord theorem2() {
  return {"theorem2", LinearFractional{2, 0, 1, -1}, eta_domain(),
          "Montgomery (1971), Thm 12.1: B(eta) <= 2/(1 - eta)"};
}

// The two branches whose maximum forms the theorem2 piecewise bound
// max(2/(1 - eta), 3/(2(1 - 2 eta))); they cross at eta = 1/5.
inline BoundRecord theorem2_low_branch() {
  return {"theorem2-low", LinearFractional{2, 0, 1, -1}, eta_domain(),
          "branch 2/(1 - eta) of the piecewise bound (eta <= 1/5)"};
}
inline BoundRecord theorem2_high_branch() {
  return {"theorem2-high", LinearFractional{3, 0, 2, -4},
          Interval::open(0, Rational(1, 2)),
          "branch 3/(2(1 - 2 eta)) of the piecewise bound (eta >= 1/5)"};
}

inline std::vector<BoundRecord> default_registry() {
  return {carlson(),    ingham(),     huxley(),     halasz_turan(),
          trivial_ceiling(), corollary4(), corollary5(), corollary6(),
          theorem2()};
}

inline BoundRecord record_by_name(const std::string& name) {
  for (const auto& r : default_registry())
    if (r.name == name) return r;
  if (name == "theorem2-low") return theorem2_low_branch();
  if (name == "theorem2-high") return theorem2_high_branch();
  throw std::invalid_argument("unknown bound record: " + name);
}

}  // namespace zdb

#endif  // ZDB_BOUND_RECORD_HPP
