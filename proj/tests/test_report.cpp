#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "confset/analysis.hpp"
#include "confset/errors.hpp"

using namespace confset;

namespace {

Outcome outcome_of(const AnalysisReport& r, std::string_view name) {
  const auto* e = r.find(name);
  REQUIRE(e != nullptr);
  return e->outcome;
}

}  // namespace

TEST_CASE("report ordering and verdicts") {
  AnalysisReport r("test", {{"x", 1}});
  CheckEntry b;
  b.name = "b";
  b.outcome = Outcome::Finding;
  CheckEntry a;
  a.name = "a";
  r.add(b);
  r.add(a);
  CHECK(r.entries().front().name == "a");
  CHECK(r.verdict() == "consistent");
  CHECK(r.exit_code() == 0);
  CHECK(r.to_json()["findings"] == 1);
  CheckEntry c;
  c.name = "c";
  c.outcome = Outcome::Disagreement;
  r.add(c);
  CHECK(r.exit_code() == 2);
  CHECK(r.to_text().find("verdict: inconsistent") != std::string::npos);
}

TEST_CASE("outcome names") {
  CHECK(to_string(Outcome::InvariantFailure) == "invariant-failure");
  CHECK(to_string(Outcome::Observed) == "observed");
}

TEST_CASE("analyze Z3^3") {
  const auto r = cmd_analyze("Z3", 3);
  CHECK(r.exit_code() == 0);
  const auto* c = r.find("generation.closure");
  REQUIRE(c);
  CHECK(c->result["generating"] == false);
  CHECK(c->result["closure_size"] == 9);
  CHECK(r.find("cayley.components")->result["components"] == 3);
  CHECK(outcome_of(r, "generation.norm_obstruction") == Outcome::Pass);
}

TEST_CASE("analyze Z4^3") {
  const auto r = cmd_analyze("Z4", 3);
  CHECK(r.exit_code() == 0);
  CHECK(r.find("generation.closure")->result["generating"] == true);
  CHECK(r.find("cayley.components")->result["components"] == 1);
  CHECK(outcome_of(r, "generation.factorizations") == Outcome::Pass);
}

TEST_CASE("cap produces skipped entries") {
  RunOptions o;
  o.max_order = 100;
  const auto r = cmd_analyze("Z5", 3, o);
  CHECK(outcome_of(r, "generation.closure") == Outcome::Skipped);
  CHECK(outcome_of(r, "config.cardinality") == Outcome::Pass);
  CHECK(r.exit_code() == 0);
}

TEST_CASE("reports are byte-identical for a fixed seed") {
  RunOptions o;
  o.seed = 9;
  CHECK(cmd_analyze("S3", 3, o).to_json_string() == cmd_analyze("S3", 3, o).to_json_string());
  CHECK(cmd_zp(5, o).to_json_string() == cmd_zp(5, o).to_json_string());
}

TEST_CASE("timings are opt-in") {
  RunOptions o;
  CHECK_FALSE(cmd_analyze("Z3", 2, o).to_json()["checks"][0].contains("wall_ms"));
  o.timings = true;
  CHECK(cmd_analyze("Z3", 2, o).to_json()["checks"][0].contains("wall_ms"));
}

TEST_CASE("zp") {
  const auto r = cmd_zp(3);
  CHECK(r.find("zp.dimension")->result["dimension"] == 2);
  CHECK(outcome_of(r, "zp.claimed_basis") == Outcome::Pass);
  CHECK(outcome_of(r, "zp.homogeneous_dependence") == Outcome::Pass);
  CHECK_THROWS_AS(cmd_zp(2), std::invalid_argument);
  CHECK_THROWS_AS(cmd_zp(11), std::invalid_argument);
  CHECK_THROWS_AS(cmd_zp(4), std::invalid_argument);
}

TEST_CASE("punctured") {
  const auto z3 = cmd_punctured("Z3", 1);
  CHECK(outcome_of(z3, "quotient.literal") == Outcome::Finding);
  CHECK(outcome_of(z3, "quotient.orbit") == Outcome::Pass);
  CHECK(z3.exit_code() == 0);
  const auto d3 = cmd_punctured("D3", 1);
  CHECK(d3.find("phi.homomorphism_iff_abelian")->result["homomorphism"] == false);
  CHECK(outcome_of(d3, "phi.image") == Outcome::Pass);
  CHECK(cmd_punctured("Z4", 2).find("product.bijection")->result["domain_size"] == 24);
}

TEST_CASE("bad specs throw") {
  CHECK_THROWS_AS(cmd_analyze("Q8", 2), ParseError);
  CHECK_THROWS_AS(cmd_analyze("Z3", 0), std::invalid_argument);
}

TEST_CASE("predicted generation") {
  CHECK(predicted_generation(make_group("S3"), 2) == true);
  CHECK(predicted_generation(make_group("Z5"), 4) == true);
  CHECK(predicted_generation(make_group("Z5"), 5) == false);
  CHECK_FALSE(predicted_generation(make_group("D3"), 6).has_value());
}
