#pragma once

// The acceptance battery: fixed graphs, fixed parameters and fixed sample
// grids, grouped into numbered criteria. Every report carries its criterion
// number as the "criterion" parameter.

#include <string>
#include <vector>

#include "dynbax/baxter.hpp"
#include "dynbax/lattice.hpp"

namespace dynbax {

enum class TolProfile { Default, Strict };

/// "default" | "strict"; InputError otherwise.
TolProfile parse_tol_profile(const std::string& s);
std::string tol_profile_name(TolProfile p);

/// Tolerances are multiplied by this (strict is 10x tighter). Thresholds of
/// PassRule::Above checks are divided by it instead.
double profile_factor(TolProfile p);

inline constexpr int kCriteria = 9;
std::string criterion_title(int criterion);

/// Graph TL family with its PF face weights, named after the diagram.
TLFamily diagram_family(const std::string& diagram);

/// tri with lambda = pi/h for classical diagrams, rational for affine ones.
SpectralParam natural_param(const DiagramSpec& spec);

/// Line family of the battery: L = 3 for tri/hyp, elliptic tau = 0.8i with
/// L = 4, window 1..13 with the default shift.
LineParams battery_line(LineKind kind);

/// Runs criteria 1-8 in a fixed order. Exceptions thrown while building a
/// check become failing reports carrying the message as a warning.
/// Criterion 9 (determinism of the CLI output) is judged by the acceptance
/// runner, which compares two complete CLI runs.
std::vector<Report> run_suite(TolProfile profile = TolProfile::Default);

/// Criterion number recorded in the report, or 0.
int criterion_of(const Report& r);

struct CriterionSummary {
  int criterion = 0;
  std::size_t checks = 0;
  std::size_t failed = 0;
  bool pass() const { return checks > 0 && failed == 0; }
};

/// One entry per criterion 1-8 present in reports, ascending.
std::vector<CriterionSummary> summarize(const std::vector<Report>& reports);

/// Fixed-width table: one row per report plus a totals line.
std::string summary_table(const std::vector<Report>& reports);

/// Text of a JSON document with every "wall_time_ms" line removed.
std::string strip_timing(const std::string& json_text);

}  // namespace dynbax
