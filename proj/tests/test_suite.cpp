#include <doctest.h>

#include <set>

#include "dynbax/errors.hpp"
#include "dynbax/suite.hpp"

using namespace dynbax;

TEST_SUITE("suite") {

TEST_CASE("default battery passes") {
  const auto reports = run_suite();
  CHECK(reports.size() >= 12);
  std::set<int> seen;
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CAPTURE(r.graph);
    CHECK(r.pass);
    seen.insert(criterion_of(r));
  }
  CHECK(seen == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});
  const auto sums = summarize(reports);
  REQUIRE(sums.size() == 8);
  for (const auto& s : sums) CHECK(s.pass());
  CHECK(summary_table(reports).find(std::to_string(reports.size()) + "/" +
                                    std::to_string(reports.size()) + " checks passed") !=
        std::string::npos);
}

TEST_CASE("strict battery passes") {
  const auto reports = run_suite(TolProfile::Strict);
  for (const auto& r : reports) {
    CAPTURE(r.check);
    CHECK(r.pass);
  }
}

TEST_CASE("battery is deterministic apart from timing") {
  const std::string a = strip_timing(suite_to_json(run_suite()));
  const std::string b = strip_timing(suite_to_json(run_suite()));
  CHECK(a == b);
  CHECK(a.find("wall_time_ms") == std::string::npos);
}

TEST_CASE("profiles") {
  CHECK(parse_tol_profile("default") == TolProfile::Default);
  CHECK(parse_tol_profile("strict") == TolProfile::Strict);
  CHECK_THROWS_AS(parse_tol_profile("loose"), InputError);
  CHECK(profile_factor(TolProfile::Strict) == doctest::Approx(0.1));
  CHECK(tol_profile_name(TolProfile::Strict) == "strict");
  for (int c = 1; c <= kCriteria; ++c) CHECK_FALSE(criterion_title(c).empty());
}

}  // TEST_SUITE
