#ifndef ZDB_ENVELOPE_HPP
#define ZDB_ENVELOPE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zdb/bound_record.hpp"

namespace zdb {

// One root of expr_a(eta) = expr_b(eta): either an exact rational or a
// certified isolating interval [lo, hi].
struct RootIsolation {
  bool exact = true;
  Rational value;  // the root when exact
  Rational lo, hi;

  static RootIsolation at(const Rational& v) { return {true, v, v, v}; }
  static RootIsolation between(const Rational& lo, const Rational& hi) {
    return {false, (lo + hi) / 2, lo, hi};
  }
};

struct CrossoverResult {
  bool identical = false;  // same expression; no finite root list exists
  std::vector<RootIsolation> roots;
};

namespace detail {

// Isolates roots of the rational quadratic q2 x^2 + q1 x + q0 inside iv.
inline void quadratic_roots(const Rational& q2, const Rational& q1,
                            const Rational& q0, const Interval& iv,
                            const Rational& width,
                            std::vector<RootIsolation>& out) {
  const auto push_if_inside = [&](const RootIsolation& r) {
    const Rational probe = r.exact ? r.value : r.lo;
    if (iv.contains(probe) || (!r.exact && iv.contains(r.hi)))
      out.push_back(r);
  };
  if (q2 == 0) {
    if (q1 == 0) return;  // constant; the identical case is handled upstream
    push_if_inside(RootIsolation::at(-q0 / q1));
    return;
  }
  const Rational disc = q1 * q1 - 4 * q2 * q0;
  if (disc < 0) return;
  if (disc == 0) {
    push_if_inside(RootIsolation::at(-q1 / (2 * q2)));
    return;
  }
  Rational sq;
  if (exact_sqrt(disc, sq)) {
    Rational r1 = (-q1 - sq) / (2 * q2), r2 = (-q1 + sq) / (2 * q2);
    if (r1 > r2) std::swap(r1, r2);
    push_if_inside(RootIsolation::at(r1));
    push_if_inside(RootIsolation::at(r2));
    return;
  }
  // Irrational pair: sqrt(disc) enclosed dyadically, then the two roots as
  // certified isolating intervals.
  const RationalEnclosure s = nth_root_enclosure(disc, 2, width * abs(q2));
  const auto bracket = [&](int sgn) {
    Rational a = (-q1 + sgn * s.lo) / (2 * q2);
    Rational b = (-q1 + sgn * s.hi) / (2 * q2);
    if (a > b) std::swap(a, b);
    push_if_inside(RootIsolation::between(a, b));
  };
  bracket(-1);
  bracket(+1);
  std::sort(out.begin(), out.end(),
            [](const RootIsolation& a, const RootIsolation& b) {
              return a.value < b.value;
            });
}

// Sign of expr_a - expr_b at eta, narrowing power-law enclosures until the
// comparison is decided; returns 0 if still undecided at the width floor.
inline int compare_at(const BoundExpr& a, const BoundExpr& b,
                      const Rational& eta) {
  Rational width = default_enclosure_width();
  for (int pass = 0; pass < 6; ++pass) {
    const RationalEnclosure ea = eval_enclosure(a, eta, width);
    const RationalEnclosure eb = eval_enclosure(b, eta, width);
    if (ea.hi < eb.lo) return -1;
    if (ea.lo > eb.hi) return 1;
    if (ea.exact() && eb.exact()) return 0;
    width /= BigInt(1000000);
  }
  return 0;
}

}  // namespace detail

// All solutions of expr_a(eta) = expr_b(eta) on the interval. Both records
// must be valid throughout. Linear-fractional pairs reduce to a rational
// quadratic; pairs involving a power law are bracketed by certified
// bisection to the requested width.
inline CrossoverResult crossover(const BoundRecord& a, const BoundRecord& b,
                                 const Interval& interval,
                                 const Rational& width = default_enclosure_width()) {
  if (interval.empty())
    throw std::domain_error("crossover: empty interval");
  for (const auto* r : {&a, &b})
    if (r->validity.intersect(interval) != interval &&
        !(interval.intersect(r->validity) == interval))
      throw std::domain_error("crossover: record '" + r->name +
                              "' is not valid on the whole interval");
  CrossoverResult result;
  const auto* la = std::get_if<LinearFractional>(&a.expr);
  const auto* lb = std::get_if<LinearFractional>(&b.expr);
  if (la && lb) {
    // (a0 + a1 x)(d0 + d1 x) = (c0 + c1 x)(b0 + b1 x)
    const Rational q2 = la->a1 * lb->b1 - lb->a1 * la->b1;
    const Rational q1 =
        la->a0 * lb->b1 + la->a1 * lb->b0 - lb->a0 * la->b1 - lb->a1 * la->b0;
    const Rational q0 = la->a0 * lb->b0 - lb->a0 * la->b0;
    if (q2 == 0 && q1 == 0 && q0 == 0) {
      result.identical = true;
      return result;
    }
    detail::quadratic_roots(q2, q1, q0, interval, width, result.roots);
    return result;
  }
  if (a.expr == b.expr) {
    result.identical = true;
    return result;
  }
  // Power-law pair (or mixed): certified bisection on sign changes of the
  // difference over a fixed scan grid. Crossings of the records used here
  // are transversal.
  constexpr int kScan = 128;
  const Rational span = interval.hi - interval.lo;
  // Uniform probes, densified geometrically toward both endpoints so that
  // crossings like c eta^p = 1/eta very close to 0 are still bracketed.
  std::vector<Rational> probes;
  for (int i = 0; i < kScan; ++i)
    probes.push_back(interval.lo + span * (2 * i + 1) / (2 * kScan));
  Rational step = span / (2 * kScan);
  for (int k = 0; k < 60; ++k) {
    step /= 2;
    probes.push_back(interval.lo + step);
    probes.push_back(interval.hi - step);
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  Rational prev_x = probes.front();
  int prev_sign = detail::compare_at(a.expr, b.expr, prev_x);
  for (std::size_t i = 1; i < probes.size(); ++i) {
    const Rational& x = probes[i];
    const int s = detail::compare_at(a.expr, b.expr, x);
    if (s != 0 && prev_sign != 0 && s != prev_sign) {
      Rational lo = prev_x, hi = x;
      int lo_sign = prev_sign;
      while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        const int ms = detail::compare_at(a.expr, b.expr, mid);
        if (ms == 0) break;
        if (ms == lo_sign) lo = mid; else hi = mid;
      }
      result.roots.push_back(RootIsolation::between(lo, hi));
    }
    if (s != 0) { prev_sign = s; prev_x = x; }
  }
  return result;
}

// Piecewise-minimum of a record set. Segment endpoints are exact rationals:
// validity endpoints or pairwise crossover roots. Regions where no record
// is valid are covered by the trivial ceiling 1/eta.
struct EnvelopeSegment {
  Rational lo, hi;
  std::string winner;
  BoundExpr expr;
  bool tie = false;  // another record coincides on the whole segment
};

struct Envelope {
  Interval domain;
  std::vector<EnvelopeSegment> segments;
};

inline Envelope envelope(std::vector<BoundRecord> records,
                         const Interval& interval) {
  if (interval.empty() || interval.lo < 0 || interval.hi > Rational(1, 2))
    throw std::domain_error("envelope: interval must be a nonempty subset of (0, 1/2]");
  const BoundRecord fallback = trivial_ceiling();

  std::vector<Rational> cuts{interval.lo, interval.hi};
  for (const auto& r : records) {
    for (const Rational& e : {r.validity.lo, r.validity.hi})
      if (e > interval.lo && e < interval.hi) cuts.push_back(e);
  }
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      Interval common = records[i].validity.intersect(records[j].validity)
                            .intersect(interval);
      if (common.empty() || common.lo == common.hi) continue;
      const CrossoverResult cr = crossover(records[i], records[j], common);
      if (cr.identical) continue;
      for (const auto& root : cr.roots) {
        if (root.exact) {
          if (root.value > interval.lo && root.value < interval.hi)
            cuts.push_back(root.value);
        } else {
          for (const Rational& e : {root.lo, root.hi})
            if (e > interval.lo && e < interval.hi) cuts.push_back(e);
        }
      }
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Envelope env;
  env.domain = interval;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational lo = cuts[i], hi = cuts[i + 1];
    const Rational mid = (lo + hi) / 2;
    const BoundRecord* winner = nullptr;
    bool tie = false;
    for (const auto& r : records) {
      if (!r.valid_at(mid)) continue;
      if (!winner) { winner = &r; continue; }
      const int cmp = detail::compare_at(r.expr, winner->expr, mid);
      if (cmp < 0) { winner = &r; tie = false; }
      else if (cmp == 0) {
        // exact tie over the segment: lexicographically smaller name wins
        if (r.name < winner->name) { winner = &r; }
        tie = true;
      }
    }
    EnvelopeSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.tie = tie;
    if (winner) {
      seg.winner = winner->name;
      seg.expr = winner->expr;
    } else {
      seg.winner = fallback.name;
      seg.expr = fallback.expr;
    }
    // Merge with the previous segment when the winner repeats.
    if (!env.segments.empty() && env.segments.back().winner == seg.winner)
      env.segments.back().hi = seg.hi;
    else
      env.segments.push_back(std::move(seg));
  }
  return env;
}

// Maximal eta-subinterval of the record's validity where B(eta) <= 2, the
// density-hypothesis threshold. May be empty.
inline Interval dh_break_range(const BoundRecord& record) {
  const Interval& v = record.validity;
  if (v.empty())
    throw std::domain_error("dh_break_range: record has empty validity");
  if (const auto* lf = std::get_if<LinearFractional>(&record.expr)) {
    if (lf->has_pole_in(v))
      throw std::domain_error("dh_break_range: pole inside validity");
    // expr - 2 = ((a0 - 2 b0) + (a1 - 2 b1) eta) / (b0 + b1 eta)
    const Rational n0 = lf->a0 - 2 * lf->b0, n1 = lf->a1 - 2 * lf->b1;
    const int den_sign = sign(lf->denominator_at(v.midpoint()));
    if (n1 == 0) {
      const bool below = sign(n0) * den_sign <= 0;
      return below ? v : Interval::empty_interval();
    }
    const Rational root = -n0 / n1;  // expr(root) = 2
    const int slope_sign = sign(n1) * den_sign;  // sign of (expr-2) beyond root
    Interval half = slope_sign > 0
                        ? Interval{v.lo, root, v.lo_closed, true}
                        : Interval{root, v.hi, true, v.hi_closed};
    return half.intersect(v);
  }
  const auto& pl = std::get<PowerLaw>(record.expr);
  // c eta^p <= 2  <=>  eta^p <= 2/c (c > 0): exact threshold (2/c)^(1/p)
  // when 1/p is an integer.
  if (pl.c <= 0) return v;
  const Rational inv_p = 1 / pl.p;
  if (denominator(inv_p) == 1) {
    const long k = numerator(inv_p).convert_to<long>();
    const Rational threshold = pow_int(2 / pl.c, k);
    const bool increasing = pl.p > 0;
    Interval half = increasing ? Interval{v.lo, threshold, v.lo_closed, true}
                               : Interval{threshold, v.hi, true, v.hi_closed};
    return half.intersect(v);
  }
  throw std::domain_error(
      "dh_break_range: unsupported power-law exponent (1/p not integral)");
}

// Supremum of the envelope over its domain. Each segment's expression is
// monotone there, so the supremum is attained at a segment endpoint.
struct SupResult {
  RationalEnclosure value;   // point enclosure unless a power law decides it
  bool finite = true;        // false when a pole abuts an open endpoint
  bool trivial_segment = false;  // some segment is covered only by 1/eta
};

inline SupResult sup_A(const Envelope& env) {
  if (env.segments.empty())
    throw std::domain_error("sup_A: empty envelope");
  SupResult result;
  bool first = true;
  for (const auto& seg : env.segments) {
    if (seg.winner == "trivial") result.trivial_segment = true;
    const Interval seg_iv = Interval::closed(seg.lo, seg.hi);
    // Monotone on the segment: endpoint values bound the segment sup.
    if (const auto* lf = std::get_if<LinearFractional>(&seg.expr)) {
      if (lf->has_pole_in(seg_iv)) {
        // A pole can only sit at an endpoint excluded from the domain;
        // the sup is then unbounded.
        const Rational pole = -lf->b0 / lf->b1;
        const bool interior = pole > seg.lo && pole < seg.hi;
        const bool at_open_edge =
            (pole == seg.lo && seg.lo == env.domain.lo && !env.domain.lo_closed) ||
            (pole == seg.hi && seg.hi == env.domain.hi && !env.domain.hi_closed);
        if (interior || at_open_edge) {
          result.finite = false;
          continue;
        }
      }
    }
    for (const Rational& x : {seg.lo, seg.hi}) {
      // Skip excluded domain endpoints where the expression is singular.
      RationalEnclosure val;
      try {
        val = eval_enclosure(seg.expr, x, default_enclosure_width());
      } catch (const std::domain_error&) {
        if ((x == env.domain.lo && !env.domain.lo_closed) ||
            (x == env.domain.hi && !env.domain.hi_closed)) {
          result.finite = false;
          continue;
        }
        throw;
      }
      if (first || val.hi > result.value.hi) {
        if (first || val.lo > result.value.lo)
          result.value = val;
        else
          result.value.hi = val.hi;
        first = false;
      }
    }
  }
  if (first) result.finite = false;
  return result;
}

inline SupResult sup_A(const std::vector<BoundRecord>& records,
                       const Interval& interval) {
  return sup_A(envelope(records, interval));
}

// Subintervals of the record's validity where it is trivial, i.e. meets or
// exceeds the ceiling 1/eta.
inline std::vector<Interval> trivial_range(const BoundRecord& record) {
  const Interval v = record.validity.intersect(eta_domain());
  if (v.empty()) return {};
  const BoundRecord ceiling = trivial_ceiling();
  std::vector<Rational> cuts{v.lo, v.hi};
  const CrossoverResult cr = crossover(record, ceiling, v);
  if (cr.identical) return {v};
  for (const auto& root : cr.roots) {
    for (const Rational& e : {root.lo, root.hi})
      if (e > v.lo && e < v.hi) cuts.push_back(e);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (detail::compare_at(record.expr, ceiling.expr, mid) >= 0) {
      Interval seg{cuts[i], cuts[i + 1],
                   cuts[i] == v.lo ? v.lo_closed : true,
                   cuts[i + 1] == v.hi ? v.hi_closed : true};
      if (!out.empty() && out.back().hi == seg.lo)
        out.back().hi = seg.hi, out.back().hi_closed = seg.hi_closed;
      else
        out.push_back(seg);
    }
  }
  return out;
}

}  // namespace zdb

#endif  // ZDB_ENVELOPE_HPP
