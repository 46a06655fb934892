#include <catch_amalgamated.hpp>

#include "zdb/zeta.hpp"

using namespace zdb;

TEST_CASE("Euler-Maclaurin zeta at classical points") {
  CHECK(std::abs(zeta_em(Complex(2, 0)).real() - kPi * kPi / 6) < 1e-12);
  CHECK(std::abs(zeta_em(Complex(0, 0)).real() + 0.5) < 1e-12);
  CHECK(std::abs(zeta_em(Complex(4, 0)).real() - 1.0823232337111382) < 1e-12);
  CHECK(std::abs(zeta_em(Complex(0.5, 25)) -
                 Complex(0.0049845934, -0.0140123020)) < 1e-8);
}

TEST_CASE("zeta_em domain guards") {
  CHECK_THROWS_AS(zeta_em(Complex(1, 0)), std::domain_error);
  CHECK_THROWS_AS(zeta_em(Complex(-2, 5)), std::domain_error);
  CHECK_THROWS_AS(zeta_em(Complex(0.5, 2e5)), std::domain_error);
}

TEST_CASE("Borwein zeta agrees with Euler-Maclaurin off the real axis") {
  for (double t : {10.0, 50.0, 120.0}) {
    const Complex s(0.5, t);
    CHECK(std::abs(zeta_borwein(s) - zeta_em(s)) < 1e-9);
  }
}

TEST_CASE("theta matches the log-Gamma definition") {
  // theta(t) = Im log Gamma(1/4 + i t/2) - (t/2) log pi
  for (double t : {10.0, 30.0, 100.0, 1000.0, 5000.0}) {
    const double oracle =
        log_gamma(Complex(0.25, t / 2)).imag() - t / 2 * std::log(kPi);
    CHECK(std::abs(riemann_siegel_theta(t) - oracle) < 1e-7);
  }
}

TEST_CASE("Z matches |zeta| on the critical line across the branch switch") {
  for (double t : {12.0, 100.0, 149.0, 151.0, 500.0, 2500.0, 9000.0}) {
    const double z = riemann_siegel_Z(t);
    const double ref = std::abs(zeta_em(Complex(0.5, t)));
    CHECK(std::abs(std::abs(z) - ref) < 1e-6);
  }
}

TEST_CASE("Z has the first sign change where the first zero lies") {
  CHECK(riemann_siegel_Z(14.0) * riemann_siegel_Z(14.3) < 0);
  CHECK(std::abs(riemann_siegel_Z(25.0) - (-0.0148724839)) < 1e-8);
}

TEST_CASE("functional equation residual is tiny") {
  for (double t : {10.0, 17.0, 33.0}) {
    for (double sg : {0.3, 0.5, 0.7}) {
      const Complex s(sg, t);
      const Complex lhs = zeta_em(s);
      const Complex rhs = functional_equation_chi(s) * zeta_em(1.0 - s);
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }
}

TEST_CASE("zero counting at small heights") {
  CHECK(count_zeros(12).sign_change_count == 0);
  const auto rep = count_zeros(15);
  REQUIRE(rep.sign_change_count == 1);
  CHECK(std::abs(rep.zeros[0] - 14.134725) < 1e-4);
  CHECK_FALSE(rep.flagged);
}

TEST_CASE("N(100) = 29 and the count is stable under refinement") {
  const auto rep = count_zeros(100);
  CHECK(rep.sign_change_count == 29);
  CHECK(std::abs(rep.discrepancy) < 1.0);
  CHECK_FALSE(rep.flagged);
  CHECK(count_zeros(100, 0.025).sign_change_count == 29);
}

TEST_CASE("empirical N(sigma, T) certificate at modest height") {
  const auto r = empirical_N_sigma_T(0.75, 100);
  CHECK(r.count == 0);
  CHECK(r.certified);
  CHECK_THROWS_AS(empirical_N_sigma_T(0.4, 100), std::domain_error);
}

TEST_CASE("growth scan exponents order correctly in sigma") {
  const auto on_line = mu_scan(0.5, 1000, 1000);
  const auto on_edge = mu_scan(1.0, 1000, 1000);
  CHECK(on_edge.fitted_exponent < on_line.fitted_exponent);
  CHECK(on_line.fitted_exponent < 0.5);
  CHECK(!on_line.note.empty());
  // running max is nondecreasing by construction
  for (std::size_t i = 1; i < on_line.running_max.size(); ++i)
    CHECK(on_line.running_max[i].second >= on_line.running_max[i - 1].second);
  CHECK_THROWS_AS(mu_scan(0.5, 1000, 10), std::domain_error);
}
