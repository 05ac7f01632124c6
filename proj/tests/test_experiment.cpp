#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ucplab/experiment.hpp"
#include "ucplab/rand_builder.hpp"
#include "ucplab/symmetric.hpp"

using namespace ucplab;

TEST_CASE("verify_bounds_row uses the exact oracle on small rows") {
  // n=6, k=3: lower bound 6 * C(5,3,2) = 24 <= |psi(6,3)| = 60
  const BoundFlags flags = verify_bounds_row(6, 3, psi(6, 3));
  CHECK(flags.used_exact_oracle);
  CHECK(flags.lower_bound == 24);
  CHECK(flags.lower_bound_ok);
}

TEST_CASE("verify_bounds_row on psi(4,2)") {
  // 4 * C(3,2,1) = 8 <= 12
  const BoundFlags flags = verify_bounds_row(4, 2, psi(4, 2));
  CHECK(flags.lower_bound == 8);
  CHECK(flags.lower_bound_ok);
}

TEST_CASE("verify_bounds_row checks the hypergraph size identity") {
  const BuildResult build = build_connected_restrictions(8, 4, 3, 5);
  const CnfFormula star = theta(build.hypergraph);
  const BoundFlags good = verify_bounds_row(8, 4, star, build.hypergraph.size());
  CHECK(good.size_consistent);
  const BoundFlags bad = verify_bounds_row(8, 4, star, build.hypergraph.size() + 1);
  CHECK_FALSE(bad.size_consistent);
}

TEST_CASE("verify_bounds_row falls back to the counting bound for large n") {
  const BuildResult build = build_connected_restrictions(12, 6, 3, 5);
  const CnfFormula star = theta(build.hypergraph);
  const BoundFlags flags = verify_bounds_row(12, 6, star, build.hypergraph.size());
  CHECK_FALSE(flags.used_exact_oracle);
  // 12 * ceil(binom(11,5)/6) = 12 * 77
  CHECK(flags.lower_bound == 924);
  CHECK(flags.lower_bound_ok);
}

TEST_CASE("a small separation run verifies end to end") {
  SeparationConfig config;
  config.n_values = {6, 8};
  config.s = 3;
  config.seed = 17;
  const SeparationResult result = run_separation(config);
  REQUIRE(result.rows.size() == 2);
  for (const SeparationRow& row : result.rows) {
    CAPTURE(row.error);
    CHECK(row.ok());
    CHECK(row.star_equiv_absorption.has_value());  // n <= 10 double oracle
  }
  CHECK(result.rows[0].phi_ell_size == 40);
  CHECK(result.rows[1].phi_ell_size == 175);
}

TEST_CASE("csv output is deterministic and has the documented header") {
  SeparationConfig config;
  config.n_values = {8, 6};  // rows come out in ascending n order
  config.s = 3;
  config.seed = 99;
  const SeparationResult a = run_separation(config);
  const SeparationResult b = run_separation(config);
  std::ostringstream sa, sb;
  write_csv(a, sa);
  write_csv(b, sb);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().rfind("n,k,phi_ell,phi_star,ratio,lower_bound,checks\n", 0) == 0);
  CHECK(a.rows[0].n == 6);
  CHECK(a.rows[1].n == 8);
}

TEST_CASE("json sidecar carries config and per-row metadata") {
  SeparationConfig config;
  config.n_values = {6};
  config.s = 3;
  config.seed = 4;
  const SeparationResult result = run_separation(config);
  std::ostringstream out;
  write_json_sidecar(result, out);
  const std::string text = out.str();
  CHECK(text.find("\"seed\": 4") != std::string::npos);
  CHECK(text.find("\"coverSize\"") != std::string::npos);
  CHECK(text.find("\"millis\"") != std::string::npos);
}
