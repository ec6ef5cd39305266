#include <doctest.h>

#include <cmath>
#include <limits>

#include "dynbax/errors.hpp"
#include "dynbax/report.hpp"

using namespace dynbax;

namespace {

Report sample() {
  Report r;
  r.check = "dTL";
  r.graph = "A5";
  r.family = "pf";
  r.param("lambda", 0.5235987755982988);
  r.param("N", 3);
  r.param("kappa", std::complex<double>(1.0, -0.25));
  r.param("route", "tl");
  r.add(1, "T^2=kappa T", 1.25e-16);
  r.add(std::nullopt, "global", 3e-13);
  r.skip(5, "incomplete");
  r.warnings.push_back("note");
  r.tol = 1e-12;
  r.wall_time_ms = 4.5;
  r.finalize();
  return r;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("finalize") {
  Report r = sample();
  CHECK(r.pass);
  CHECK(r.max_residual == 3e-13);
  Report empty;
  empty.tol = 1.0;
  empty.finalize();
  CHECK_FALSE(empty.pass);
  Report nan = sample();
  nan.add(2, "x", std::numeric_limits<double>::quiet_NaN());
  nan.finalize();
  CHECK_FALSE(nan.pass);
  Report above = sample();
  above.rule = PassRule::Above;
  above.tol = 1e-14;
  above.finalize();
  CHECK(above.pass);
  above.tol = 1e-3;
  above.finalize();
  CHECK_FALSE(above.pass);
}

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
}

TEST_CASE("JSON round trip") {
  const Report r = sample();
  const Report back = report_from_json(to_json(r));
  CHECK(back.same_content(r));
  CHECK(to_json(back) == to_json(r));
  Report other = r;
  other.wall_time_ms = 100.0;
  CHECK(other.same_content(r));
  other.per_vertex[0].residual = 2e-16;
  CHECK_FALSE(other.same_content(r));
  CHECK_THROWS_AS(report_from_json("{not json"), InputError);
}

TEST_CASE("suite JSON round trip") {
  Report failing = sample();
  failing.check = "dHecke";
  failing.tol = 1e-20;
  failing.finalize();
  const std::vector<Report> rs{sample(), failing};
  const auto back = suite_from_json(suite_to_json(rs));
  REQUIRE(back.size() == 2);
  CHECK(back[0].same_content(rs[0]));
  CHECK(back[1].same_content(rs[1]));
  CHECK(suite_to_json(rs).find("\"failed\": 1") != std::string::npos);
  CHECK_THROWS_AS(suite_from_json("[]"), InputError);
}

TEST_CASE("CSV and text") {
  const std::string csv = to_csv({sample()});
  CHECK(csv.rfind("check,graph,vertex,relation,residual,tol,pass\n", 0) == 0);
  CHECK(csv.find("dTL,A5,1,\"T^2=kappa T\",") != std::string::npos);
  CHECK(csv.find("dTL,A5,,\"global\",") != std::string::npos);
  const std::string t = to_text(sample());
  CHECK(t.rfind("PASS dTL [A5] (pf) max_residual=", 0) == 0);
  CHECK(t.find("skipped=1") != std::string::npos);
}

}  // TEST_SUITE
