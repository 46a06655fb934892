// Command-line front end for the zero-density bound calculus and the
// desk-scale zeta engine. Exit codes: 0 success, 1 domain/claim failure,
// 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zdb/claims.hpp"
#include "zdb/envelope.hpp"
#include "zdb/io.hpp"
#include "zdb/theorems.hpp"
#include "zdb/zeta.hpp"

namespace {

using namespace zdb;

struct CommonOpts {
  std::string out_path;
  std::string format = "json";
  std::string mu_table_path;
  std::string hypothesis = "none";
};

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + opts.out_path);
  f << text;
}

MuTable load_table(const CommonOpts& opts) {
  MuTable t = opts.mu_table_path.empty()
                  ? MuTable::hardy_littlewood()
                  : mu_table_from_csv_file(opts.mu_table_path);
  if (opts.hypothesis == "lh")
    t.set_hypothesis(HypothesisMode::Lindelof);
  else if (opts.hypothesis != "none" && opts.hypothesis != "custom")
    throw std::invalid_argument("unknown hypothesis mode: " + opts.hypothesis);
  return t;
}

std::vector<BoundRecord> parse_records(const std::string& csv) {
  if (csv.empty()) return default_registry();
  std::vector<BoundRecord> out;
  std::stringstream ss(csv);
  std::string name;
  while (std::getline(ss, name, ',')) out.push_back(record_by_name(name));
  return out;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--out", opts.out_path, "write output to a file");
  cmd->add_option("--format", opts.format, "output format: csv|json|svg");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zero-density exponent calculus and desk-scale zeta engine"};
  app.require_subcommand(1);
  CommonOpts opts;

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "exact B(eta) bound calculus");
  bounds->require_subcommand(1);

  std::string eta_str, record_name, rec_a, rec_b, records_csv;
  std::string lo_str = "1/1000000", hi_str = "1/2";
  int ell = 0, ell_max = kEllCap;
  bool use_best = false;

  auto* b_eval = bounds->add_subcommand(
      "eval", "evaluate a bound at exact rational eta");
  b_eval->add_option("--eta", eta_str, "eta as an exact rational num/den")
      ->required();
  b_eval->add_option("--ell", ell, "dyadic level for max(4u,3v)");
  b_eval->add_option("--record", record_name, "named bound record");
  b_eval->add_flag("--best", use_best, "minimize over ell in [1, ell-max]");
  b_eval->add_option("--ell-max", ell_max, "cap for --best");
  b_eval->add_option("--mu-table", opts.mu_table_path, "mu table CSV path");
  b_eval->add_option("--hypothesis", opts.hypothesis, "none|lh");
  add_common(b_eval, opts);

  auto* b_env = bounds->add_subcommand("envelope",
                                       "piecewise minimum over records");
  b_env->add_option("--records", records_csv, "comma-separated record names");
  b_env->add_option("--lo", lo_str, "interval lower endpoint (rational)");
  b_env->add_option("--hi", hi_str, "interval upper endpoint (rational)");
  add_common(b_env, opts);

  auto* b_cross = bounds->add_subcommand("crossover",
                                         "exact equality points of two records");
  b_cross->add_option("--a", rec_a, "first record name")->required();
  b_cross->add_option("--b", rec_b, "second record name")->required();
  b_cross->add_option("--lo", lo_str, "interval lower endpoint (rational)");
  b_cross->add_option("--hi", hi_str, "interval upper endpoint (rational)");
  add_common(b_cross, opts);

  auto* b_dh = bounds->add_subcommand(
      "dh-range", "maximal eta-range where the record is <= 2");
  b_dh->add_option("--record", record_name, "record name")->required();
  add_common(b_dh, opts);

  auto* b_sup = bounds->add_subcommand(
      "sup", "supremum of the envelope (uniform A(sigma) exponent)");
  b_sup->add_option("--records", records_csv, "comma-separated record names");
  b_sup->add_option("--lo", lo_str, "interval lower endpoint (rational)");
  b_sup->add_option("--hi", hi_str, "interval upper endpoint (rational)");
  add_common(b_sup, opts);

  auto* b_triv = bounds->add_subcommand(
      "trivial-range", "eta-range where the record meets or exceeds 1/eta");
  b_triv->add_option("--record", record_name, "record name")->required();
  add_common(b_triv, opts);

  // ---- gaps ----
  auto* gaps = app.add_subcommand("gaps", "prime-gap transfer");
  gaps->require_subcommand(1);
  std::string A_str;
  auto* g_exp = gaps->add_subcommand(
      "exponent", "prime-gap exponent 1 - 1/A from a uniform A(sigma) <= A");
  g_exp->add_option("--A", A_str, "uniform density exponent (rational)")
      ->required();
  add_common(g_exp, opts);

  // ---- claims ----
  auto* claims = app.add_subcommand("claims", "checklist of exact claims");
  claims->require_subcommand(1);
  auto* c_verify = claims->add_subcommand("verify",
                                          "re-derive every exact claim");
  c_verify->add_option("--mu-table", opts.mu_table_path, "mu table CSV path");
  c_verify->add_option("--hypothesis", opts.hypothesis, "none|lh");
  add_common(c_verify, opts);

  // ---- zeta ----
  auto* zeta = app.add_subcommand("zeta", "desk-scale numerical zeta engine");
  zeta->require_subcommand(1);
  double T = 100, grid_step = 0.05, sigma = 0.5;
  long samples = 1000;
  std::string T_list_str = "100,300,1000,3000";

  auto* z_z = zeta->add_subcommand("z", "Riemann-Siegel Z(t), t >= 10 (decimal)");
  z_z->add_option("--T", T, "evaluation point t (decimal)")->required();
  add_common(z_z, opts);

  auto* z_count = zeta->add_subcommand(
      "count", "count critical-line zeros on [10, T] vs the main term");
  z_count->add_option("--T", T, "upper height T (decimal)")->required();
  z_count->add_option("--grid-step", grid_step, "scan step, <= 0.1");
  add_common(z_count, opts);

  auto* z_scan = zeta->add_subcommand("mu-scan",
                                      "running max of |zeta(sigma + it)|");
  z_scan->add_option("--sigma", sigma, "real part (decimal)")->required();
  z_scan->add_option("--T", T, "upper height (decimal)")->required();
  z_scan->add_option("--samples", samples, "grid size, >= 1000");
  add_common(z_scan, opts);

  auto* z_check = zeta->add_subcommand(
      "check-11", "ratios N(T) / ((T/2pi) log T) over a T list");
  z_check->add_option("--T-list", T_list_str, "comma-separated T values");
  z_check->add_option("--grid-step", grid_step, "scan step, <= 0.1");
  add_common(z_check, opts);

  auto* z_nsigma = zeta->add_subcommand(
      "nsigma", "empirical N(sigma, T) with certificate");
  z_nsigma->add_option("--sigma", sigma, "real part, in (1/2, 1)")->required();
  z_nsigma->add_option("--T", T, "upper height (decimal)")->required();
  z_nsigma->add_option("--grid-step", grid_step, "scan step, <= 0.1");
  add_common(z_nsigma, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (b_eval->parsed()) {
      const Rational eta = parse_rational(eta_str);
      std::ostringstream os;
      if (!record_name.empty()) {
        const BoundRecord rec = record_by_name(record_name);
        const auto val = rec.eval_enclosure_at(eta, default_enclosure_width());
        if (val.exact())
          os << fraction_string(val.lo) << "  # " << rec.citation << "\n";
        else
          os << "[" << decimal_string(val.lo) << ", " << decimal_string(val.hi)
             << "]  # " << rec.citation << " (certified enclosure)\n";
      } else if (use_best) {
        const auto best = best_theorem1(eta, load_table(opts), ell_max);
        os << fraction_string(best.value) << "  # best dyadic level ell = "
           << best.ell << "\n";
      } else {
        if (ell <= 0)
          throw std::invalid_argument("bounds eval: pass --ell, --record or --best");
        const auto r = theorem1_bound_ex(ell, eta, load_table(opts));
        os << fraction_string(r.value)
           << "  # B(eta) <= max(4 u_ell, 3 v_ell), ell = " << ell << "\n";
        if (r.range_warning)
          os << "# warning: eta >= 1/3; the ell = 1 bound rests on its "
                "corollary's stated range eta < 1/2\n";
        os << "# " << corollary3_annotation(eta) << "\n";
      }
      emit(opts, os.str());
    } else if (b_env->parsed()) {
      const Interval iv =
          Interval::open_closed(parse_rational(lo_str), parse_rational(hi_str));
      const auto records = parse_records(records_csv);
      const Envelope env = envelope(records, iv);
      std::ostringstream os;
      if (opts.format == "csv") envelope_to_csv(env, os);
      else if (opts.format == "svg") os << svg_plot(records, env, iv);
      else os << to_json(env).dump(2) << "\n";
      emit(opts, os.str());
    } else if (b_cross->parsed()) {
      const BoundRecord a = record_by_name(rec_a), b = record_by_name(rec_b);
      Interval iv =
          Interval::open(parse_rational(lo_str), parse_rational(hi_str));
      iv = iv.intersect(a.validity).intersect(b.validity);
      const auto cr = crossover(a, b, iv);
      emit(opts, to_json(cr).dump(2) + "\n");
    } else if (b_dh->parsed()) {
      const Interval r = dh_break_range(record_by_name(record_name));
      emit(opts, to_json(r).dump(2) + "\n");
    } else if (b_sup->parsed()) {
      const Interval iv =
          Interval::open_closed(parse_rational(lo_str), parse_rational(hi_str));
      const auto sup = sup_A(parse_records(records_csv), iv);
      Json j{{"finite", sup.finite}, {"trivial_segment", sup.trivial_segment}};
      if (sup.finite) {
        j["sup"] = fraction_string(sup.value.lo);
        if (!sup.value.exact()) j["sup_hi"] = fraction_string(sup.value.hi);
        j["sup_decimal"] = decimal_string(sup.value.midpoint());
      }
      emit(opts, j.dump(2) + "\n");
    } else if (b_triv->parsed()) {
      Json arr = Json::array();
      for (const auto& iv : trivial_range(record_by_name(record_name)))
        arr.push_back(to_json(iv));
      emit(opts, arr.dump(2) + "\n");
    } else if (g_exp->parsed()) {
      const Rational g = prime_gap_exponent(parse_rational(A_str));
      std::ostringstream os;
      os << fraction_string(g)
         << "  # gap exponent 1 - 1/A; assumes the usual zero-free region "
            "near sigma = 1\n";
      emit(opts, os.str());
    } else if (c_verify->parsed()) {
      const auto results = run_all_claims(load_table(opts));
      std::ostringstream os;
      if (opts.format == "json") {
        os << claims_to_json(results).dump(2) << "\n";
      } else {
        for (const auto& r : results)
          os << r.claim_id << " " << verdict_name(r.verdict) << "  "
             << r.statement << (r.witness.empty() ? "" : "  [" + r.witness + "]")
             << "\n";
      }
      emit(opts, os.str());
      if (!all_claims_pass(results)) return 1;
    } else if (z_z->parsed()) {
      std::ostringstream os;
      os << decimal15(riemann_siegel_Z(T)) << "\n";
      emit(opts, os.str());
    } else if (z_count->parsed()) {
      const auto rep = count_zeros(T, grid_step);
      std::ostringstream os;
      if (opts.format == "csv") zeros_to_csv(rep, os);
      else os << to_json(rep).dump(2) << "\n";
      emit(opts, os.str());
      if (rep.flagged) {
        std::cerr << "possible missed zeros -- decrease grid_step\n";
        return 1;
      }
    } else if (z_scan->parsed()) {
      const auto rep = mu_scan(sigma, T, samples);
      std::ostringstream os;
      if (opts.format == "csv") {
        mu_scan_to_csv(rep, os);
      } else {
        Json j{{"sigma", rep.sigma},
               {"T", rep.t_hi},
               {"samples", rep.samples},
               {"fitted_exponent", rep.fitted_exponent},
               {"note", rep.note}};
        if (sigma == 0.5) j["reference"] = "mu(1/2) <= 1/6 (dyadic table, ell = 1)";
        else if (sigma == 1.0) j["reference"] = "mu(1) = 0";
        else if (sigma == 0.0) j["reference"] = "mu(0) = 1/2 (functional equation)";
        os << j.dump(2) << "\n";
      }
      emit(opts, os.str());
    } else if (z_check->parsed()) {
      std::vector<double> Ts;
      std::stringstream ss(T_list_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) Ts.push_back(std::stod(tok));
      const auto ratios = check_asymptotic_1_1(Ts, grid_step);
      Json arr = Json::array();
      for (const auto& [t, ratio] : ratios)
        arr.push_back({{"T", t}, {"ratio", ratio}});
      emit(opts, arr.dump(2) + "\n");
    } else if (z_nsigma->parsed()) {
      const auto r = empirical_N_sigma_T(sigma, T, grid_step);
      Json j{{"sigma", sigma},
             {"T", T},
             {"count", r.count},
             {"certified", r.certified},
             {"certificate", r.certificate}};
      emit(opts, j.dump(2) + "\n");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
