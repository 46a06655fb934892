#include <catch_amalgamated.hpp>

#include <sstream>

#include "zdb/io.hpp"

using namespace zdb;

TEST_CASE("mu table CSV round trip") {
  MuTable t;
  t.insert(mu_hl(0));
  t.insert(mu_hl(1));
  t.insert(mu_vdc(4));
  std::ostringstream out;
  mu_table_to_csv(t, out);
  std::istringstream in(out.str());
  const MuTable back = mu_table_from_csv(in);
  REQUIRE(back.size() == t.size());
  for (const auto& [alpha, pt] : t.points()) {
    const MuPoint got = back.lookup(alpha);
    CHECK(got.mu_bound == pt.mu_bound);
    CHECK(got.source == pt.source);
  }
}

TEST_CASE("CSV parse errors carry line numbers") {
  std::istringstream in("# header\n1,2,bogus,4,Custom,x\n");
  CHECK_THROWS_AS(mu_table_from_csv(in), std::invalid_argument);
  std::istringstream short_line("1,2\n");
  CHECK_THROWS_AS(mu_table_from_csv(short_line), std::invalid_argument);
}

TEST_CASE("envelope serialization keeps exact endpoints") {
  const Envelope env = envelope({ingham(), theorem2()}, eta_domain());
  const Json j = to_json(env);
  REQUIRE(j["segments"].size() == 2);
  CHECK(j["segments"][0]["eta_hi"] == "1/5");
  CHECK(j["segments"][1]["winner"] == "ingham");
  std::ostringstream csv;
  envelope_to_csv(env, csv);
  CHECK(csv.str().find("1,5") != std::string::npos);
  CHECK(csv.str().find("ingham") != std::string::npos);
}

TEST_CASE("crossover serialization distinguishes exact and isolated roots") {
  const auto exact = crossover(corollary5(), corollary4(),
                               Interval::open(0, Rational(1, 8)));
  const Json je = to_json(exact);
  CHECK(je["roots"][0]["exact"] == true);
  CHECK(je["roots"][0]["value"] == "1/24");

  const auto isolated = crossover(carlson(), corollary4(),
                                  Interval::open(0, Rational(1, 4)));
  const Json ji = to_json(isolated);
  CHECK(ji["roots"][0]["exact"] == false);
  CHECK(ji["roots"][0].contains("lo"));
  CHECK(ji["roots"][0].contains("hi"));
}

TEST_CASE("claims serialize with verdicts") {
  const auto results = run_all_claims(MuTable::hardy_littlewood());
  const Json j = claims_to_json(results);
  REQUIRE(j.size() == 15);
  CHECK(j[0]["verdict"] == "ExactPass");
  CHECK(j[11]["claim_id"] == "C12");
}

TEST_CASE("SVG plot embeds exact breakpoint labels") {
  const auto records = std::vector<BoundRecord>{ingham(), theorem2()};
  const Envelope env = envelope(records, eta_domain());
  const std::string svg = svg_plot(records, env, eta_domain());
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("eta = 1/5") != std::string::npos);
  CHECK(svg.find("ingham") != std::string::npos);
  // deterministic output
  CHECK(svg == svg_plot(records, env, eta_domain()));
}
