#include <doctest.h>

#include <set>

#include "cforge/verify.hpp"

namespace vf = cforge::verify;

TEST_CASE("every required claim has a suite") {
  // Independent copy of the claim register; a dropped suite fails here.
  const std::vector<std::string> required = {
      "crystal-axioms",
      "operator-set-well-defined",
      "subword-property",
      "demazure-containment",
      "extremal-union-intersection",
      "extremal-connected",
      "demazure-extremal",
      "extremal-path-words",
      "ideal-union",
      "demazure-ideal",
      "ideal-demazure-containment",
      "ideal-classification",
      "ideal-intersection",
      "atom-string-property",
      "atom-disjointness",
      "atomic-partition-of-demazure",
      "atomic-decomposition",
      "atom-intersection",
      "demazure-principal",
      "demazure-characterization",
      "character-criterion",
      "singular-weight-classification",
      "coset-floor-invariance",
      "ideal-local-global-agreement",
  };
  std::set<std::string> covered;
  for (const auto& info : vf::suites()) {
    for (const auto& claim : info.claims) covered.insert(claim);
  }
  for (const std::string& claim : required) {
    INFO("claim: ", claim);
    CHECK(covered.count(claim) == 1);
  }
}

TEST_CASE("all suites pass on the default instance") {
  vf::SuiteOptions opts;
  for (const auto& result : vf::run_all(opts)) {
    INFO("suite: ", result.name);
    for (const auto& f : result.failures) INFO("failure: ", f);
    CHECK(result.pass);
  }
}

TEST_CASE("sweep suites refuse oversized instances without force") {
  vf::SuiteOptions opts;
  opts.element_cap = 4;  // the default instance has 8 elements
  auto res = vf::run_suite("theoremC", opts);
  CHECK_FALSE(res.pass);
  REQUIRE(!res.failures.empty());
  CHECK(res.failures.front().find("cap") != std::string::npos);

  opts.force = true;
  CHECK(vf::run_suite("theoremC", opts).pass);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(vf::run_suite("no-such-suite", vf::SuiteOptions{}), cforge::error);
  CHECK(vf::has_suite("paths"));
  CHECK_FALSE(vf::has_suite("no-such-suite"));
}
