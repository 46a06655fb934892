// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "zdb/claims.hpp"
#include "zdb/envelope.hpp"
#include "zdb/theorems.hpp"
#include "zdb/zeta.hpp"

using namespace zdb;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void report(const char* id, const char* what, bool ok, double elapsed,
            double budget, const std::string& detail = "") {
  const bool in_budget = elapsed <= budget;
  if (!ok || !in_budget) ++failures;
  std::printf("%s %s: %s (%.2fs, budget %.0fs)%s%s\n",
              (ok && in_budget) ? "PASS" : "FAIL", id, what, elapsed, budget,
              detail.empty() ? "" : " -- ", detail.c_str());
}

}  // namespace

int main() {
  // 1. Every checklist claim re-derives exactly on the dyadic table.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_all_claims(MuTable::hardy_littlewood());
    bool ok = results.size() == 15;
    std::string detail;
    for (const auto& r : results)
      if (r.verdict != ClaimVerdict::ExactPass) {
        ok = false;
        detail = r.claim_id + " " + verdict_name(r.verdict) + " " + r.witness;
      }
    report("1", "all 15 claims ExactPass", ok, seconds_since(t0), 1, detail);
  }

  // 2. Exact property suite: collapse identity, v = u composition,
  //    envelope soundness, crossover back-substitution.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const MuTable hl = MuTable::hardy_littlewood();
    std::mt19937_64 rng(20240811);
    bool ok = true;
    for (int ell = 2; ell <= 20 && ok; ++ell) {
      const Rational hi(1, pow2(static_cast<unsigned>(ell)));
      for (int i = 0; i < 50 && ok; ++i) {
        const Rational eta = random_rational_in(0, hi, rng);
        ok = theorem1_bound(ell, eta, hl) == corollary2_bound(ell, eta);
      }
    }
    for (int i = 0; i < 1000 && ok; ++i) {
      const int ell = 1 + int(rng() % 10);
      const Rational eta =
          random_rational_in(0, Rational(1, pow2(unsigned(ell))), rng);
      ok = v_ell(ell, eta, hl) == u_ell(ell - 1, 2 * eta, hl);
    }
    const Envelope env = envelope(default_registry(), eta_domain());
    for (const auto& seg : env.segments) {
      for (int k = 1; k <= 10 && ok; ++k) {
        const Rational eta = seg.lo + (seg.hi - seg.lo) * Rational(k, 11);
        const auto wv = eval_enclosure(seg.expr, eta, default_enclosure_width());
        for (const auto& r : default_registry()) {
          if (!r.valid_at(eta)) continue;
          const auto rv = r.eval_enclosure_at(eta, default_enclosure_width());
          if (wv.lo > rv.hi) ok = false;
        }
      }
    }
    const auto registry = default_registry();
    for (std::size_t i = 0; i < registry.size() && ok; ++i)
      for (std::size_t j = i + 1; j < registry.size() && ok; ++j) {
        const Interval common =
            registry[i].validity.intersect(registry[j].validity);
        if (common.empty() || common.lo == common.hi) continue;
        const auto cr = crossover(registry[i], registry[j], common);
        if (cr.identical) continue;
        for (const auto& root : cr.roots) {
          if (root.exact) {
            // exact roots back-substitute to exact equality (both LF here)
            ok = ok && registry[i].eval(root.value) ==
                           registry[j].eval(root.value);
          } else {
            ok = ok && root.hi - root.lo <= default_enclosure_width();
          }
        }
      }
    report("2", "exact property suite", ok, seconds_since(t0), 10);
  }

  // 3. Z cross-validates the Euler-Maclaurin path; functional equation.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(3);
    bool ok = true;
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      const double t =
          10.0 + (1e4 - 10.0) * double(rng() % 1000000) / 999999.0;
      const double diff = std::abs(std::abs(riemann_siegel_Z(t)) -
                                   std::abs(zeta_em(Complex(0.5, t))));
      worst = std::max(worst, diff);
      if (diff > 1e-6) ok = false;
    }
    for (int i = 0; i < 20; ++i) {
      const double t = 10.0 + 40.0 * double(rng() % 1000000) / 999999.0;
      const double sg = 0.1 + 0.8 * double(rng() % 1000000) / 999999.0;
      const Complex s(sg, t);
      const double res = std::abs(zeta_em(s) - functional_equation_chi(s) *
                                                   zeta_em(1.0 - s));
      if (res > 1e-8) ok = false;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst |Z|-|zeta| diff %.2e", worst);
    report("3", "Z vs zeta_em within 1e-6; functional equation within 1e-8",
           ok, seconds_since(t0), 30, buf);
  }

  // 4. Zero counts against the main term; empirical N(sigma, T).
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = count_zeros(100).sign_change_count == 29;
    for (double T : {100.0, 500.0, 1000.0, 2000.0}) {
      const auto rep = count_zeros(T);
      if (std::abs(rep.discrepancy) > 2.0 || rep.flagged) ok = false;
    }
    const auto ns = empirical_N_sigma_T(0.75, 500);
    if (!(ns.count == 0 && ns.certified)) ok = false;
    report("4", "N(100) = 29; counts track theta/pi + 1; N(3/4, 500) = 0 certified",
           ok, seconds_since(t0), 120);
  }

  // 5. The counting ratios rise toward 1 and stay below it.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ratios = check_asymptotic_1_1({100, 300, 1000, 3000});
    bool ok = ratios.size() == 4;
    for (std::size_t i = 0; i < ratios.size() && ok; ++i) {
      if (ratios[i].second >= 1.0) ok = false;
      if (i > 0 && ratios[i].second <= ratios[i - 1].second) ok = false;
    }
    report("5", "N(T)/((T/2pi) log T) strictly increasing, below 1", ok,
           seconds_since(t0), 120);
  }

  // 6. Hypothesis plumbing: mu(1/2) = 3/16 reproduces the ell = 1 record;
  //    Lindelof zeroes the ell = 2 bound below 1/4.
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(6);
    bool ok = true;
    MuTable hyp;
    hyp.insert(mu_hl(0));
    hyp.insert({Rational(1, 2), Rational(3, 16), MuSource::Hypothesis,
                "hypothetical mu(1/2) <= 3/16"});
    for (int i = 0; i < 100 && ok; ++i) {
      const Rational eta = random_rational_in(0, Rational(1, 2), rng);
      ok = theorem1_bound(1, eta, hyp) == corollary6().eval(eta);
    }
    MuTable lh = MuTable::hardy_littlewood();
    lh.set_hypothesis(HypothesisMode::Lindelof);
    for (int i = 0; i < 100 && ok; ++i) {
      const Rational eta = random_rational_in(0, Rational(1, 4), rng);
      ok = theorem1_bound(2, eta, lh) == 0;
    }
    report("6", "hypothesis modes: mu(1/2) = 3/16 and Lindelof", ok,
           seconds_since(t0), 10);
  }

  return failures == 0 ? 0 : 1;
}
