#ifndef ZDB_THEOREMS_HPP
#define ZDB_THEOREMS_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "zdb/bound_record.hpp"
#include "zdb/mu_table.hpp"

namespace zdb {

inline Rational alpha_ell(int ell) {
  if (ell < 0) throw std::domain_error("alpha_ell: ell must be >= 0");
  const BigInt p = pow2(static_cast<unsigned>(ell));
  return Rational(p - 1, p);
}

// u_ell(eta) = mu(alpha_ell) / (2^-ell - eta). Defined for 0 <= eta < 2^-ell;
// eta = 0 is admitted here (only) so the limit value is reachable.
inline Rational u_ell(int ell, const Rational& eta, const MuTable& table) {
  if (ell < 0 || ell > kEllCap)
    throw std::out_of_range("u_ell: ell out of range [0, 40]");
  const Rational denom = Rational(1, pow2(static_cast<unsigned>(ell))) - eta;
  if (eta < 0 || denom <= 0)
    throw std::domain_error("u_ell: requires 0 <= eta < 2^-ell");
  return table.lookup(alpha_ell(ell)).mu_bound / denom;
}

// v_ell(eta) = u_{ell-1}(2*eta) = mu(alpha_{ell-1}) / (2 (2^-ell - eta)).
inline Rational v_ell(int ell, const Rational& eta, const MuTable& table) {
  if (ell < 1 || ell > kEllCap)
    throw std::out_of_range("v_ell: ell out of range [1, 40]");
  const Rational denom = Rational(1, pow2(static_cast<unsigned>(ell))) - eta;
  if (eta < 0 || denom <= 0)
    throw std::domain_error("v_ell: requires 0 <= eta < 2^-ell");
  return table.lookup(alpha_ell(ell - 1)).mu_bound / (2 * denom);
}

struct Theorem1Result {
  Rational value;
  // Set for ell = 1, eta >= 1/3: the bound is stated there only through
  // the ell = 1 corollary's own range eta < 1/2.
  bool range_warning = false;
};

// B(eta) <= max(4 u_ell(eta), 3 v_ell(eta)).
// Validity guard: 0 < eta < 2^-ell always (denominator positivity), which
// also enforces eta < 1/3 for ell >= 2; ell = 1 admits eta < 1/2.
inline Theorem1Result theorem1_bound_ex(int ell, const Rational& eta,
                                        const MuTable& table) {
  if (ell < 1 || ell > kEllCap)
    throw std::out_of_range("theorem1_bound: ell out of range [1, 40]");
  if (eta <= 0)
    throw std::domain_error("theorem1_bound: requires eta > 0");
  if (eta >= Rational(1, pow2(static_cast<unsigned>(ell))))
    throw std::domain_error("theorem1_bound: requires eta < 2^-ell (got eta = " +
                            fraction_string(eta) + ", ell = " + std::to_string(ell) + ")");
  Theorem1Result r;
  const Rational a = 4 * u_ell(ell, eta, table);
  const Rational b = 3 * v_ell(ell, eta, table);
  r.value = a > b ? a : b;
  r.range_warning = ell == 1 && eta >= Rational(1, 3);
  return r;
}

inline Rational theorem1_bound(int ell, const Rational& eta,
                               const MuTable& table) {
  return theorem1_bound_ex(ell, eta, table).value;
}

// Closed-form collapse of theorem1 under the Hardy--Littlewood table:
// B(eta) <= 4/((ell + 2)(1 - 2^ell eta)) for ell >= 2, eta < 2^-ell.
inline Rational corollary2_bound(int ell, const Rational& eta) {
  if (ell < 2 || ell > kEllCap)
    throw std::domain_error("corollary2_bound: requires 2 <= ell <= 40");
  const Rational scaled = Rational(pow2(static_cast<unsigned>(ell))) * eta;
  if (eta <= 0 || scaled >= 1)
    throw std::domain_error("corollary2_bound: requires 0 < eta < 2^-ell");
  return Rational(4) / (Rational(ell + 2) * (1 - scaled));
}

struct BestTheorem1 {
  int ell = 0;
  Rational value;
};

// Minimizes theorem1_bound over ell in [1, ell_max]; exact ties break
// toward the smaller ell.
inline BestTheorem1 best_theorem1(const Rational& eta, const MuTable& table,
                                  int ell_max = kEllCap) {
  if (eta <= 0 || eta >= Rational(1, 2))
    throw std::domain_error("best_theorem1: requires 0 < eta < 1/2");
  if (ell_max < 1 || ell_max > kEllCap)
    throw std::out_of_range("best_theorem1: ell_max out of range [1, 40]");
  std::optional<BestTheorem1> best;
  for (int ell = 1; ell <= ell_max; ++ell) {
    if (eta >= Rational(1, pow2(static_cast<unsigned>(ell)))) break;
    if (!table.has(alpha_ell(ell)) || !table.has(alpha_ell(ell - 1))) continue;
    const Rational v = theorem1_bound(ell, eta, table);
    if (!best || v < best->value) best = {ell, v};
  }
  if (!best)
    throw std::domain_error("best_theorem1: no valid ell for eta = " +
                            fraction_string(eta));
  return *best;
}

// B(eta) <= max(2/(1 - eta), 3/(2(1 - 2 eta))), the ell = 0 variant with
// only mu(0) = 1/2 as input. Equals the piecewise form with branch point
// eta = 1/5.
inline Rational theorem2_bound(const Rational& eta) {
  if (eta <= 0 || eta >= Rational(1, 2))
    throw std::domain_error("theorem2_bound: requires 0 < eta < 1/2");
  const Rational a = Rational(2) / (1 - eta);
  const Rational b = Rational(3) / (2 * (1 - 2 * eta));
  return a > b ? a : b;
}

// Same bound computed from a mu table that must contain the alpha = 0
// point; no other table entry is consulted.
inline Rational theorem2_bound_from_table(const Rational& eta,
                                          const MuTable& table) {
  if (eta <= 0 || eta >= Rational(1, 2))
    throw std::domain_error("theorem2_bound: requires 0 < eta < 1/2");
  const Rational mu0 = table.lookup(Rational(0)).mu_bound;
  const Rational a = 4 * mu0 / (1 - eta);        // 4 u_0(eta)
  const Rational b = 3 * mu0 / (1 - 2 * eta);    // 3 u_0(2 eta)
  return a > b ? a : b;
}

// p_{n+1} - p_n << p_n^{1 - 1/A + eps} for a uniform density exponent
// A >= 2 (plus a zero-free region input not modeled here; the caveat about
// the neighbourhood of sigma = 1 is surfaced by callers).
inline Rational prime_gap_exponent(const Rational& A) {
  if (A < 2)
    throw std::domain_error(
        "prime_gap_exponent: requires A >= 2 (below the density-hypothesis "
        "optimum the transfer is not asserted)");
  return 1 - 1 / A;
}

// Asymptotic annotation 4*log(2)/log(1/eta); report-only, never enters
// exact envelopes.
inline std::string corollary3_annotation(const Rational& eta) {
  if (eta <= 0 || eta >= 1)
    throw std::domain_error("corollary3: requires 0 < eta < 1");
  const double v = 4.0 * 0.6931471805599453 /
                   (-std::log(to_double(eta)));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::string("B(eta) <~ 4 log 2 / log(1/eta) ~= ") + buf +
         " (asymptotic annotation, 1 + o(1) slack)";
}

enum class BoundId {
  Carlson,
  Ingham,
  Huxley,
  HalaszTuran,
  Trivial,
  Corollary4,
  Corollary5,
  Corollary6,
  Theorem2,
  Theorem2Piecewise,
};

struct NamedBoundValue {
  RationalEnclosure value;  // point enclosure for exact records
  bool exact = true;
  std::string citation;
};

inline NamedBoundValue named_bound(BoundId id, const Rational& eta) {
  const auto from_record = [&](const BoundRecord& r) {
    NamedBoundValue v;
    v.value = r.eval_enclosure_at(eta, default_enclosure_width());
    v.exact = v.value.exact();
    v.citation = r.citation;
    return v;
  };
  switch (id) {
    case BoundId::Carlson: return from_record(carlson());
    case BoundId::Ingham: return from_record(ingham());
    case BoundId::Huxley: return from_record(huxley());
    case BoundId::HalaszTuran: return from_record(halasz_turan());
    case BoundId::Trivial: return from_record(trivial_ceiling());
    case BoundId::Corollary4: return from_record(corollary4());
    case BoundId::Corollary5: return from_record(corollary5());
    case BoundId::Corollary6: return from_record(corollary6());
    case BoundId::Theorem2: return from_record(theorem2());
    case BoundId::Theorem2Piecewise: {
      NamedBoundValue v;
      const Rational x = theorem2_bound(eta);
      v.value = {x, x};
      v.citation = "piecewise: 2/(1-eta) for eta <= 1/5, 3/(2(1-2 eta)) for eta >= 1/5";
      return v;
    }
  }
  throw std::invalid_argument("unknown bound id");
}

}  // namespace zdb

#endif  // ZDB_THEOREMS_HPP
