// Acceptance runner: one PASS/FAIL line per criterion. Criteria 1-8 run the
// battery in process; criterion 9 runs the CLI suite twice and compares the
// JSON documents with timing lines removed.

#include <array>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "dynbax/report.hpp"
#include "dynbax/suite.hpp"

#ifndef DYNBAX_CLI
#error "DYNBAX_CLI must name the dynbax executable"
#endif

namespace {

bool capture(const std::string& cmd, std::string& out) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return false;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return WIFEXITED(status) && WEXITSTATUS(status) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace dynbax;
  TolProfile profile = TolProfile::Default;
  try {
    if (argc > 1) profile = parse_tol_profile(argv[1]);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const auto reports = run_suite(profile);
  bool all = true;
  const auto sums = summarize(reports);
  for (int c = 1; c <= 8; ++c) {
    CriterionSummary s{c, 0, 0};
    for (const auto& x : sums)
      if (x.criterion == c) s = x;
    all = all && s.pass();
    std::cout << (s.pass() ? "PASS" : "FAIL") << " criterion " << c << ": "
              << criterion_title(c) << " (" << (s.checks - s.failed) << "/" << s.checks
              << " checks)\n";
    if (!s.pass()) {
      for (const auto& r : reports)
        if (criterion_of(r) == c && !r.pass) std::cout << "  " << to_text(r) << "\n";
    }
  }

  const std::string cmd = std::string("\"") + DYNBAX_CLI + "\" suite --json --tol-profile " +
                          tol_profile_name(profile) + " 2>/dev/null";
  std::string first, second;
  const bool ran = capture(cmd, first) && capture(cmd, second);
  const bool same = ran && !first.empty() && strip_timing(first) == strip_timing(second);
  all = all && same;
  std::cout << (same ? "PASS" : "FAIL") << " criterion 9: " << criterion_title(9) << " ("
            << (ran ? (same ? "identical after removing timing" : "outputs differ")
                    : "suite run failed")
            << ")\n";

  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return all ? 0 : 1;
}
