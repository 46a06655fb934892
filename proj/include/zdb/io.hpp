#ifndef ZDB_IO_HPP
#define ZDB_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdb/claims.hpp"
#include "zdb/envelope.hpp"
#include "zdb/mu_table.hpp"
#include "zdb/zeta.hpp"

namespace zdb {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// MuTable CSV: alpha_num,alpha_den,mu_num,mu_den,source_tag,citation_text
// '#' lines are comments. Exact integers only.

inline MuTable mu_table_from_csv(std::istream& in) {
  MuTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 5)
      throw std::invalid_argument("mu table CSV line " + std::to_string(lineno) +
                                  ": expected 6 fields");
    MuPoint pt;
    try {
      const BigInt ad(fields[1]), md(fields[3]);
      if (ad == 0 || md == 0)
        throw std::invalid_argument("mu table CSV line " +
                                    std::to_string(lineno) + ": zero denominator");
      pt.alpha = Rational(BigInt(fields[0])) / ad;
      pt.mu_bound = Rational(BigInt(fields[2])) / md;
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("mu table CSV line " + std::to_string(lineno) +
                                  ": non-integer numerator/denominator");
    }
    pt.source = mu_source_from_name(fields[4]);
    pt.citation = fields.size() > 5 ? fields[5] : "";
    table.insert(pt);
  }
  return table;
}

inline MuTable mu_table_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mu table: " + path);
  return mu_table_from_csv(in);
}

inline void mu_table_to_csv(const MuTable& table, std::ostream& out) {
  out << "# alpha_num,alpha_den,mu_num,mu_den,source_tag,citation_text\n";
  for (const auto& [alpha, pt] : table.points()) {
    out << numerator(pt.alpha) << ',' << denominator(pt.alpha) << ','
        << numerator(pt.mu_bound) << ',' << denominator(pt.mu_bound) << ','
        << mu_source_name(pt.source) << ',' << pt.citation << '\n';
  }
}

// ---------------------------------------------------------------------------
// Envelope CSV:
// eta_lo_num,eta_lo_den,eta_hi_num,eta_hi_den,winner,expr,value_at_midpoint

inline void envelope_to_csv(const Envelope& env, std::ostream& out) {
  out << "# eta_lo_num,eta_lo_den,eta_hi_num,eta_hi_den,winner_name,"
         "expr_repr,value_at_midpoint_decimal\n";
  for (const auto& seg : env.segments) {
    const Rational mid = (seg.lo + seg.hi) / 2;
    const RationalEnclosure val =
        eval_enclosure(seg.expr, mid, default_enclosure_width());
    out << numerator(seg.lo) << ',' << denominator(seg.lo) << ','
        << numerator(seg.hi) << ',' << denominator(seg.hi) << ','
        << seg.winner << ',' << expr_repr(seg.expr) << ','
        << decimal_string(val.midpoint()) << '\n';
  }
}

// ---------------------------------------------------------------------------
// JSON: every exact value is serialized as a "num/den" string; decimals are
// annotations only.

inline Json to_json(const Rational& x) { return fraction_string(x); }

inline Json to_json(const Interval& iv) {
  if (iv.empty()) return Json{{"empty", true}};
  return Json{{"lo", fraction_string(iv.lo)},
              {"hi", fraction_string(iv.hi)},
              {"lo_closed", iv.lo_closed},
              {"hi_closed", iv.hi_closed}};
}

inline Json to_json(const Envelope& env) {
  Json segs = Json::array();
  for (const auto& seg : env.segments) {
    const Rational mid = (seg.lo + seg.hi) / 2;
    segs.push_back(
        {{"eta_lo", fraction_string(seg.lo)},
         {"eta_hi", fraction_string(seg.hi)},
         {"winner", seg.winner},
         {"expr", expr_repr(seg.expr)},
         {"value_at_midpoint",
          decimal_string(eval_enclosure(seg.expr, mid, default_enclosure_width())
                             .midpoint())},
         {"tie", seg.tie}});
  }
  return Json{{"domain", to_json(env.domain)}, {"segments", segs}};
}

inline Json to_json(const CrossoverResult& cr) {
  if (cr.identical) return Json{{"identical", true}};
  Json roots = Json::array();
  for (const auto& r : cr.roots) {
    if (r.exact)
      roots.push_back({{"exact", true}, {"value", fraction_string(r.value)}});
    else
      roots.push_back({{"exact", false},
                       {"lo", fraction_string(r.lo)},
                       {"hi", fraction_string(r.hi)},
                       {"approx", decimal_string(r.value)}});
  }
  return Json{{"identical", false}, {"roots", roots}};
}

inline Json to_json(const ClaimResult& r) {
  return Json{{"claim_id", r.claim_id},
              {"anchor", r.statement},
              {"verdict", verdict_name(r.verdict)},
              {"witness", r.witness}};
}

inline Json claims_to_json(const std::vector<ClaimResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  return arr;
}

inline std::string decimal15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

inline Json to_json(const ZeroCountReport& rep) {
  return Json{{"T", rep.T},
              {"count", rep.sign_change_count},
              {"rvm", rep.rvm_main_term},
              {"discrepancy", rep.discrepancy},
              {"flagged", rep.flagged}};
}

inline void zeros_to_csv(const ZeroCountReport& rep, std::ostream& out) {
  out << "# t,value\n";
  for (double z : rep.zeros)
    out << decimal15(z) << ',' << decimal15(riemann_siegel_Z(z)) << '\n';
}

inline void mu_scan_to_csv(const MuScanReport& rep, std::ostream& out) {
  out << "# t,value\n";
  for (const auto& [t, v] : rep.running_max)
    out << decimal15(t) << ',' << decimal15(v) << '\n';
}

// ---------------------------------------------------------------------------
// Static SVG plot: one polyline per record over a uniform grid, plus the
// envelope with exact breakpoints embedded as labels.

inline std::string svg_plot(const std::vector<BoundRecord>& records,
                            const Envelope& env, const Interval& window,
                            int grid_points = 256) {
  constexpr double W = 800, H = 500, ML = 60, MR = 20, MT = 20, MB = 40;
  const double x_lo = to_double(window.lo), x_hi = to_double(window.hi);
  double y_hi = 0;
  const auto sample = [&](const BoundRecord& r, double frac) -> double {
    const Rational eta =
        window.lo + (window.hi - window.lo) * Rational(int(frac * 10000) + 1, 10002);
    if (!r.valid_at(eta)) return -1;
    return to_double(
        r.eval_enclosure_at(eta, default_enclosure_width()).midpoint());
  };
  for (const auto& r : records)
    for (int i = 0; i <= 16; ++i) {
      const double v = sample(r, i / 16.0);
      if (v > y_hi && v < 20) y_hi = v;
    }
  if (y_hi <= 0) y_hi = 5;
  y_hi *= 1.1;
  const auto px = [&](double x) {
    return ML + (x - x_lo) / (x_hi - x_lo) * (W - ML - MR);
  };
  const auto py = [&](double y) { return H - MB - y / y_hi * (H - MT - MB); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML
      << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                           "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                           "#bcbd22", "#17becf"};
  int color = 0;
  for (const auto& r : records) {
    svg << "<polyline fill=\"none\" stroke=\"" << palette[color % 10]
        << "\" stroke-width=\"1\" points=\"";
    for (int i = 0; i <= grid_points; ++i) {
      const double v = sample(r, double(i) / grid_points);
      if (v < 0 || v > y_hi) continue;
      const double x =
          x_lo + (x_hi - x_lo) * (double(int(double(i) / grid_points * 10000)) + 1) / 10002;
      svg << decimal15(px(x)) << ',' << decimal15(py(v)) << ' ';
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << W - MR - 150 << "\" y=\"" << MT + 16 * (color + 1)
        << "\" fill=\"" << palette[color % 10] << "\" font-size=\"12\">"
        << r.name << "</text>\n";
    ++color;
  }
  // Envelope breakpoints with exact rational labels.
  for (const auto& seg : env.segments) {
    const double x = to_double(seg.lo);
    if (x <= x_lo || x >= x_hi) continue;
    svg << "<line x1=\"" << px(x) << "\" y1=\"" << MT << "\" x2=\"" << px(x)
        << "\" y2=\"" << H - MB
        << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n";
    svg << "<text x=\"" << px(x) + 2 << "\" y=\"" << H - MB - 6
        << "\" font-size=\"11\">eta = " << fraction_string(seg.lo)
        << "</text>\n";
  }
  svg << "<text x=\"" << (W / 2) << "\" y=\"" << H - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">eta</text>\n";
  svg << "<text x=\"14\" y=\"" << (H / 2)
      << "\" font-size=\"12\" transform=\"rotate(-90 14 " << (H / 2)
      << ")\" text-anchor=\"middle\">B(eta)</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace zdb

#endif  // ZDB_IO_HPP
