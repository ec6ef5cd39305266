#pragma once

// Verification report shared by every checker, and its JSON / CSV / text
// serializations. JSON output is deterministic: fixed field order, doubles
// printed with 17 significant digits.

#include <chrono>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dynbax/graph.hpp"

namespace dynbax {

struct ReportItem {
  std::optional<Vertex> vertex;
  std::string relation;
  double residual = 0.0;

  friend bool operator==(const ReportItem&, const ReportItem&) = default;
};

struct SkipRecord {
  std::optional<Vertex> vertex;
  std::string reason;

  friend bool operator==(const SkipRecord&, const SkipRecord&) = default;
};

/// How max_residual is compared with tol. Most checks demand residuals
/// below tol; obstruction demonstrations demand a value above it.
enum class PassRule { Below, Above };

struct Report {
  std::string check;
  std::string graph;
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ReportItem> per_vertex;
  std::vector<SkipRecord> skipped;
  std::vector<std::string> warnings;
  double max_residual = 0.0;
  double tol = 0.0;
  PassRule rule = PassRule::Below;
  bool pass = false;
  double wall_time_ms = 0.0;

  void param(const std::string& key, const std::string& value);
  void param(const std::string& key, const char* value);
  void param(const std::string& key, double value);
  void param(const std::string& key, int value);
  void param(const std::string& key, std::complex<double> value);

  void add(std::optional<Vertex> vertex, std::string relation, double residual);
  void skip(std::optional<Vertex> vertex, std::string reason);

  /// Recomputes max_residual and pass. A report with no items fails, and so
  /// does any NaN residual.
  void finalize();

  /// Equality ignoring wall_time_ms.
  bool same_content(const Report& other) const;
};

/// Formats a double with 17 significant digits ("%.17g").
std::string format_double(double x);

std::string to_json(const Report& r, int indent = 2);
Report report_from_json(const std::string& text);

/// Suite documents: {"reports": [...], "summary": {...}}.
std::string suite_to_json(const std::vector<Report>& reports, int indent = 2);
std::vector<Report> suite_from_json(const std::string& text);

/// One row per item: check,vertex,relation,residual,tol,pass.
std::string to_csv(const std::vector<Report>& reports);
/// One line per report: "PASS check [graph] max_residual=... tol=...".
std::string to_text(const Report& r);

/// Measures wall time into a report on destruction of the scope.
class ScopedTimer {
 public:
  explicit ScopedTimer(Report& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ScopedTimer() {
    report_.wall_time_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start_)
                               .count();
  }
  ScopedTimer(const ScopedTimer&) = delete;
  ScopedTimer& operator=(const ScopedTimer&) = delete;

 private:
  Report& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace dynbax
