#ifndef ZDB_MU_TABLE_HPP
#define ZDB_MU_TABLE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdb/rational.hpp"

namespace zdb {

// Cap on the dyadic exponent ell. 2^40 exceeds any eta precision a caller
// will supply; the optimal ell is about log2(1/eta).
inline constexpr int kEllCap = 40;

enum class MuSource {
  HardyLittlewood,
  VanDerCorput,
  FunctionalEquation,
  Hypothesis,
  Custom,
};

inline const char* mu_source_name(MuSource s) {
  switch (s) {
    case MuSource::HardyLittlewood: return "HardyLittlewood";
    case MuSource::VanDerCorput: return "VanDerCorput";
    case MuSource::FunctionalEquation: return "FunctionalEquation";
    case MuSource::Hypothesis: return "Hypothesis";
    case MuSource::Custom: return "Custom";
  }
  return "?";
}

inline MuSource mu_source_from_name(const std::string& s) {
  if (s == "HardyLittlewood") return MuSource::HardyLittlewood;
  if (s == "VanDerCorput") return MuSource::VanDerCorput;
  if (s == "FunctionalEquation") return MuSource::FunctionalEquation;
  if (s == "Hypothesis") return MuSource::Hypothesis;
  if (s == "Custom") return MuSource::Custom;
  throw std::invalid_argument("unknown mu source tag: " + s);
}

// A certified point (alpha, mu_bar(alpha)) bounding the growth exponent of
// |zeta(alpha + it)| in t.
struct MuPoint {
  Rational alpha;
  Rational mu_bound;
  MuSource source = MuSource::Custom;
  std::string citation;
};

// Weyl--Hardy--Littlewood table point:
//   mu(1 - 2^-ell) <= 1 / ((ell + 2) 2^ell),  ell >= 0.
// The ell = 0 point mu(0) = 1/2 comes from the functional equation.
inline MuPoint mu_hl(int ell) {
  if (ell < 0) throw std::domain_error("mu_hl: ell must be >= 0");
  if (ell > kEllCap)
    throw std::out_of_range("mu_hl: exponent table cap exceeded (ell > 40)");
  const BigInt p = pow2(static_cast<unsigned>(ell));
  MuPoint pt;
  pt.alpha = Rational(p - 1, p);
  pt.mu_bound = Rational(1, BigInt(ell + 2) * p);
  pt.source = ell == 0 ? MuSource::FunctionalEquation : MuSource::HardyLittlewood;
  pt.citation = ell == 0 ? "mu(0) = 1/2 by the functional equation"
                         : "Hardy--Littlewood: mu(1 - 2^-l) <= 1/((l+2) 2^l)";
  return pt;
}

// Van der Corput table point:
//   mu(1 - ell/(2^ell - 2)) <= 1 / (2^ell - 2),  ell >= 2.
inline MuPoint mu_vdc(int ell) {
  if (ell < 2)
    throw std::domain_error("mu_vdc: formula requires ell >= 2");
  if (ell > kEllCap)
    throw std::out_of_range("mu_vdc: exponent table cap exceeded (ell > 40)");
  const BigInt d = pow2(static_cast<unsigned>(ell)) - 2;
  MuPoint pt;
  pt.alpha = Rational(d - ell, d);
  pt.mu_bound = Rational(1, d);
  pt.source = MuSource::VanDerCorput;
  pt.citation = "Van der Corput: mu(1 - l/(2^l - 2)) <= 1/(2^l - 2)";
  return pt;
}

enum class HypothesisMode { None, Lindelof, Custom };

// Finite set of mu points keyed by alpha, with optional hypothesis
// overrides. Lindelof mode forces mu = 0 at every alpha >= 1/2.
class MuTable {
 public:
  MuTable() = default;

  // Rejects points inconsistent with the trivial growth of zeta
  // (mu > 1 - alpha) and records a warning for points above the convexity
  // line (1 - alpha)/2. Replaces any existing point at the same alpha.
  void insert(const MuPoint& pt) {
    if (pt.alpha < 0 || pt.alpha > 1)
      throw std::domain_error("mu point: alpha must lie in [0, 1]");
    if (pt.mu_bound < 0)
      throw std::domain_error("mu point: mu_bound must be >= 0");
    if (pt.mu_bound > 1 - pt.alpha)
      throw std::domain_error("mu point rejected: mu_bound " +
                              fraction_string(pt.mu_bound) + " exceeds 1 - alpha at alpha = " +
                              fraction_string(pt.alpha));
    if (pt.source == MuSource::FunctionalEquation && pt.alpha == 0 &&
        pt.mu_bound != Rational(1, 2))
      throw std::domain_error(
          "mu point: the functional-equation point at alpha = 0 is mu = 1/2");
    if (2 * pt.mu_bound > 1 - pt.alpha)
      warnings_.push_back("mu point at alpha = " + fraction_string(pt.alpha) +
                          " lies above the convexity line (1 - alpha)/2");
    points_[pt.alpha] = pt;
  }

  void set_hypothesis(HypothesisMode mode) { mode_ = mode; }
  HypothesisMode hypothesis() const { return mode_; }

  // Custom-hypothesis override: replaces, never appends a duplicate alpha.
  void add_override(const MuPoint& pt) {
    mode_ = HypothesisMode::Custom;
    overrides_[pt.alpha] = pt;
  }

  bool has(const Rational& alpha) const {
    if (mode_ == HypothesisMode::Lindelof && alpha >= Rational(1, 2))
      return true;
    if (mode_ == HypothesisMode::Custom && overrides_.count(alpha)) return true;
    return points_.count(alpha) != 0;
  }

  MuPoint lookup(const Rational& alpha) const {
    if (mode_ == HypothesisMode::Lindelof && alpha >= Rational(1, 2))
      return {alpha, 0, MuSource::Hypothesis, "Lindelof: mu(alpha) = 0 for alpha >= 1/2"};
    if (mode_ == HypothesisMode::Custom) {
      auto it = overrides_.find(alpha);
      if (it != overrides_.end()) return it->second;
    }
    auto it = points_.find(alpha);
    if (it == points_.end())
      throw std::out_of_range("mu table has no point at alpha = " +
                              fraction_string(alpha));
    return it->second;
  }

  const std::map<Rational, MuPoint>& points() const { return points_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::size_t size() const { return points_.size(); }

  static MuTable hardy_littlewood(int ell_max = kEllCap) {
    MuTable t;
    for (int ell = 0; ell <= ell_max; ++ell) t.insert(mu_hl(ell));
    return t;
  }

  static MuTable van_der_corput(int ell_max = kEllCap) {
    MuTable t;
    t.insert(mu_hl(0));
    for (int ell = 2; ell <= ell_max; ++ell) t.insert(mu_vdc(ell));
    return t;
  }

 private:
  std::map<Rational, MuPoint> points_;
  std::map<Rational, MuPoint> overrides_;
  HypothesisMode mode_ = HypothesisMode::None;
  std::vector<std::string> warnings_;
};

}  // namespace zdb

#endif  // ZDB_MU_TABLE_HPP
