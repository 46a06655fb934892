#include <catch_amalgamated.hpp>

#include "zdb/mu_table.hpp"

using namespace zdb;

TEST_CASE("dyadic table points") {
  CHECK(mu_hl(0).alpha == 0);
  CHECK(mu_hl(0).mu_bound == Rational(1, 2));
  CHECK(mu_hl(0).source == MuSource::FunctionalEquation);
  CHECK(mu_hl(1).alpha == Rational(1, 2));
  CHECK(mu_hl(1).mu_bound == Rational(1, 6));
  CHECK(mu_hl(2).alpha == Rational(3, 4));
  CHECK(mu_hl(2).mu_bound == Rational(1, 16));
  CHECK(mu_hl(3).mu_bound == Rational(1, 40));
  CHECK_THROWS_AS(mu_hl(41), std::out_of_range);
  CHECK_THROWS_AS(mu_hl(-1), std::domain_error);
}

TEST_CASE("van der Corput table points") {
  CHECK(mu_vdc(2).alpha == 0);
  CHECK(mu_vdc(2).mu_bound == Rational(1, 2));
  CHECK(mu_vdc(3).alpha == Rational(1, 2));
  CHECK(mu_vdc(3).mu_bound == Rational(1, 6));
  CHECK(mu_vdc(4).alpha == Rational(5, 7));
  CHECK(mu_vdc(4).mu_bound == Rational(1, 14));
  CHECK_THROWS_AS(mu_vdc(1), std::domain_error);
}

TEST_CASE("insert rejects points worse than trivial growth") {
  MuTable t;
  CHECK_THROWS_AS(t.insert({Rational(3, 4), Rational(1, 2), MuSource::Custom, ""}),
                  std::domain_error);
  CHECK_THROWS_AS(t.insert({Rational(2), Rational(0), MuSource::Custom, ""}),
                  std::domain_error);
  CHECK_THROWS_AS(t.insert({Rational(1, 2), Rational(-1, 8), MuSource::Custom, ""}),
                  std::domain_error);
}

TEST_CASE("points above the convexity line warn but insert") {
  MuTable t;
  t.insert({Rational(1, 2), Rational(1, 3), MuSource::Custom, "weak"});
  REQUIRE(t.warnings().size() == 1);
  CHECK(t.lookup(Rational(1, 2)).mu_bound == Rational(1, 3));
}

TEST_CASE("functional equation point is pinned at alpha = 0") {
  MuTable t;
  CHECK_THROWS_AS(
      t.insert({Rational(0), Rational(1, 3), MuSource::FunctionalEquation, ""}),
      std::domain_error);
}

TEST_CASE("Lindelof mode overrides alpha >= 1/2") {
  MuTable t = MuTable::hardy_littlewood();
  t.set_hypothesis(HypothesisMode::Lindelof);
  CHECK(t.lookup(Rational(1, 2)).mu_bound == 0);
  CHECK(t.lookup(Rational(3, 4)).mu_bound == 0);
  CHECK(t.lookup(Rational(0)).mu_bound == Rational(1, 2));
  CHECK(t.has(Rational(7, 8)));
}

TEST_CASE("custom override replaces a point without duplicating it") {
  MuTable t = MuTable::hardy_littlewood();
  t.add_override({Rational(1, 2), Rational(3, 16), MuSource::Hypothesis, "x"});
  CHECK(t.lookup(Rational(1, 2)).mu_bound == Rational(3, 16));
  t.add_override({Rational(1, 2), Rational(1, 8), MuSource::Hypothesis, "y"});
  CHECK(t.lookup(Rational(1, 2)).mu_bound == Rational(1, 8));
}

TEST_CASE("lookup of a missing point throws") {
  MuTable t;
  t.insert(mu_hl(0));
  CHECK_THROWS_AS(t.lookup(Rational(1, 3)), std::out_of_range);
}
