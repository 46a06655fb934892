#include <catch_amalgamated.hpp>

#include "zdb/envelope.hpp"

using namespace zdb;

TEST_CASE("rational crossover roots") {
  const auto c45 = crossover(corollary5(), corollary4(),
                             Interval::open(0, Rational(1, 8)));
  REQUIRE(c45.roots.size() == 1);
  CHECK(c45.roots[0].exact);
  CHECK(c45.roots[0].value == Rational(1, 24));

  const auto c64 = crossover(corollary6(), corollary4(),
                             Interval::open(0, Rational(1, 4)));
  REQUIRE(c64.roots.size() == 1);
  CHECK(c64.roots[0].value == Rational(1, 8));

  const auto c6t = crossover(corollary6(), trivial_ceiling(),
                             Interval::open(0, Rational(1, 2)));
  REQUIRE(c6t.roots.size() == 1);
  CHECK(c6t.roots[0].value == Rational(2, 7));
}

TEST_CASE("identical expressions are reported, not root-listed") {
  const auto cr = crossover(theorem2(), theorem2_low_branch(), eta_domain());
  CHECK(cr.identical);
  CHECK(cr.roots.empty());
}

TEST_CASE("irrational quadratic root gets a certified isolating interval") {
  // (4 - 4 eta)(1 - 4 eta) = 1 has the root (5 - sqrt(13))/8 inside (0, 1/4)
  const auto cr = crossover(carlson(), corollary4(),
                            Interval::open(0, Rational(1, 4)));
  REQUIRE(cr.roots.size() == 1);
  const auto& r = cr.roots[0];
  CHECK_FALSE(r.exact);
  CHECK(r.hi - r.lo <= default_enclosure_width());
  // back-substitution: the difference changes sign across the interval
  const auto diff = [](const Rational& eta) {
    return carlson().eval(eta) - corollary4().eval(eta);
  };
  CHECK(sign(diff(r.lo)) * sign(diff(r.hi)) <= 0);
  // 16 r^2 - 20 r + 3 straddles zero on the bracket
  const auto q = [](const Rational& x) { return 16 * x * x - 20 * x + 3; };
  CHECK(sign(q(r.lo)) * sign(q(r.hi)) <= 0);
}

TEST_CASE("power-law crossover by certified bisection") {
  const auto cr = crossover(halasz_turan(), trivial_ceiling(),
                            Interval::open(0, Rational(1, 2)));
  REQUIRE(cr.roots.size() == 1);
  const auto& r = cr.roots[0];
  CHECK_FALSE(r.exact);
  CHECK(r.hi - r.lo <= default_enclosure_width());
  // root of 120000 eta^{3/2} = 1: eta = 120000^{-2/3} ~ 4.10e-4
  CHECK(r.lo > Rational(4, 10000));
  CHECK(r.hi < Rational(42, 100000));
}

TEST_CASE("crossover outside a record's validity throws") {
  CHECK_THROWS_AS(crossover(corollary5(), corollary4(),
                            Interval::open(0, Rational(1, 4))),
                  std::domain_error);
}

TEST_CASE("two-record envelope and its sup") {
  const Envelope env = envelope({ingham(), theorem2()}, eta_domain());
  REQUIRE(env.segments.size() == 2);
  CHECK(env.segments[0].winner == "theorem2");
  CHECK(env.segments[0].hi == Rational(1, 5));
  CHECK(env.segments[1].winner == "ingham");
  CHECK(env.segments[1].hi == Rational(1, 2));
  const auto sup = sup_A(env);
  CHECK(sup.finite);
  CHECK(sup.value.exact());
  CHECK(sup.value.lo == Rational(5, 2));
  CHECK_FALSE(sup.trivial_segment);
}

TEST_CASE("full-registry envelope is sound and exhaustive") {
  const Envelope env = envelope(default_registry(), eta_domain());
  REQUIRE(!env.segments.empty());
  CHECK(env.segments.front().lo == 0);
  CHECK(env.segments.back().hi == Rational(1, 2));
  for (std::size_t i = 0; i + 1 < env.segments.size(); ++i)
    CHECK(env.segments[i].hi == env.segments[i + 1].lo);
  // winner really is minimal at interior sample points
  for (const auto& seg : env.segments) {
    for (int k = 1; k <= 10; ++k) {
      const Rational eta = seg.lo + (seg.hi - seg.lo) * Rational(k, 11);
      const auto wv = eval_enclosure(seg.expr, eta, default_enclosure_width());
      for (const auto& r : default_registry()) {
        if (!r.valid_at(eta)) continue;
        const auto rv = r.eval_enclosure_at(eta, default_enclosure_width());
        CHECK(wv.lo <= rv.hi);
      }
    }
  }
}

TEST_CASE("uncovered regions fall back to the trivial ceiling") {
  const Envelope env =
      envelope({corollary5()}, Interval::open_closed(0, Rational(1, 2)));
  REQUIRE(env.segments.size() == 2);
  CHECK(env.segments[0].winner == "corollary5");
  CHECK(env.segments[1].winner == "trivial");
  CHECK(env.segments[1].lo == Rational(1, 8));
}

TEST_CASE("density-hypothesis break ranges") {
  CHECK(dh_break_range(corollary4()) ==
        Interval::open_closed(0, Rational(1, 8)));
  CHECK(dh_break_range(corollary5()) ==
        Interval::open_closed(0, Rational(3, 40)));
  CHECK(dh_break_range(corollary6()) ==
        Interval::open_closed(0, Rational(1, 8)));
  // boundary equality: the record value is exactly 2 at the right endpoint
  CHECK(corollary4().eval(Rational(1, 8)) == 2);
  CHECK(corollary5().eval(Rational(3, 40)) == 2);
  CHECK(corollary6().eval(Rational(1, 8)) == 2);
  // Ingham meets 2 only at eta = 1/2
  const Interval ing = dh_break_range(ingham());
  CHECK(ing.lo == Rational(1, 2));
  CHECK(ing.hi == Rational(1, 2));
  // Carlson reaches 2 only at eta = 1/2
  const Interval car = dh_break_range(carlson());
  CHECK(car.lo == Rational(1, 2));
  CHECK(car.hi == Rational(1, 2));
  // Huxley 12/5 > 2 everywhere
  CHECK(dh_break_range(huxley()).empty());
}

TEST_CASE("power-law break range with integral 1/p") {
  // 120000 eta^{1/2} <= 2 iff eta <= (1/60000)^2
  const Interval r = dh_break_range(halasz_turan());
  CHECK(r.hi == Rational(1, BigInt(60000) * 60000));
  CHECK(r.lo == 0);
}

TEST_CASE("trivial range of the ell = 1 record") {
  const auto segs = trivial_range(corollary6());
  REQUIRE(segs.size() == 1);
  CHECK(segs[0].lo == Rational(2, 7));
  CHECK(segs[0].hi == Rational(1, 2));
  CHECK(segs[0].lo_closed);
  CHECK_FALSE(segs[0].hi_closed);
}

TEST_CASE("sup over a domain whose open edge hits a pole is infinite") {
  // corollary6 alone on (0, 1/2): pole of 3/(2 - 4 eta) at the open edge
  const auto sup = sup_A({corollary6()}, Interval::open(0, Rational(1, 2)));
  CHECK_FALSE(sup.finite);
}
