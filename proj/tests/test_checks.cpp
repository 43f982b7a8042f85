#include <doctest.h>

#include <set>

#include "freetransform/checks.hpp"
#include "freetransform/errors.hpp"

using namespace freetransform;

TEST_SUITE("checks") {

TEST_CASE("every named suite passes") {
  for (const std::string& name : suite_names()) {
    const std::vector<CheckResult> results = run_suite(name);
    CHECK(!results.empty());
    for (const CheckResult& r : results) {
      CAPTURE(r.name);
      CAPTURE(r.deviation);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("check names are unique and prefixed by their suite") {
  const std::vector<CheckResult> all = run_suite("all");
  std::set<std::string> seen;
  for (const CheckResult& r : all) CHECK(seen.insert(r.name).second);
  for (const std::string& name : suite_names()) {
    for (const CheckResult& r : run_suite(name)) CHECK(r.name.rfind(name + ".", 0) == 0);
  }
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("bogus"), InvalidInput); }

}  // TEST_SUITE
