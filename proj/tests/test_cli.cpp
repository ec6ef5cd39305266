#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "dynbax/report.hpp"

#ifndef DYNBAX_CLI
#error "DYNBAX_CLI must name the dynbax executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string("\"") + DYNBAX_CLI + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "dynbax_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CHECK(run("verify tl --graph E6").code == 0);
  CHECK(run("verify ybe --graph A5").code == 0);
  CHECK(run("verify ybe --graph ell").code == 1);
  CHECK(run("verify nosuch --graph A5").code == 2);
  CHECK(run("verify tl --graph Q7").code == 2);
  CHECK(run("verify tl --graph A5 --bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("verify --json emits one report") {
  const Run r = run("verify tl --graph E6 --json");
  REQUIRE(r.code == 0);
  const auto rep = dynbax::report_from_json(r.out);
  CHECK(rep.check == "dTL");
  CHECK(rep.pass);
}

TEST_CASE("graphs list") {
  const Run r = run("graphs list --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("E8") != std::string::npos);
  CHECK(run("graphs list").out.find("D_aff") != std::string::npos);
}

TEST_CASE("chain spectrum CSV") {
  const fs::path csv = scratch("spectrum.csv");
  fs::remove(csv);
  const Run r = run("chain --graph A4 --sites 6 --diagonalize --check-commute --csv " + csv.string());
  CHECK(r.code == 0);
  const std::string text = slurp(csv);
  CHECK(text.rfind("index,eigenvalue\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 37);
}

TEST_CASE("transfer") {
  CHECK(run("transfer --graph A4 --sites 6 --check-commute").code == 0);
  const fs::path csv = scratch("m.csv");
  fs::remove(csv);
  CHECK(run("transfer --graph A3 --sites 4 --matrix-csv " + csv.string()).code == 0);
  CHECK_FALSE(slurp(csv).empty());
}

TEST_CASE("build then verify from the family file") {
  const fs::path f = scratch("a5_hecke.json");
  fs::remove(f);
  REQUIRE(run("build --graph A5 --kind hecke --out " + f.string()).code == 0);
  CHECK(run("verify hecke --family-file " + f.string()).code == 0);
  const fs::path t = scratch("a5_tl.json");
  REQUIRE(run("build --graph A5 --kind tl --out " + t.string()).code == 0);
  CHECK(run("verify tl --family-file " + t.string()).code == 0);
  CHECK(run("verify tl --family-file " + scratch("missing.json").string()).code == 2);
}

TEST_CASE("edge-list graphs") {
  const fs::path g = scratch("a4.txt");
  {
    std::ofstream out(g);
    out << "1 2\n2 3\n3 4\n";
  }
  CHECK(run("verify tl --graph-file " + g.string()).code == 0);
}

TEST_CASE("unwritable output") {
  CHECK(run("verify tl --graph A5 --json --out /nonexistent/dir/x.json").code == 2);
}

TEST_CASE("suite output") {
  const Run r = run("suite --json");
  REQUIRE(r.code == 0);
  const auto reps = dynbax::suite_from_json(r.out);
  CHECK(reps.size() >= 12);
  const Run csv = run("suite --csv");
  CHECK(csv.out.rfind("check,graph,vertex,relation,residual,tol,pass\n", 0) == 0);
}

}  // TEST_SUITE
