#pragma once

// Built-in ADE and affine ADE diagrams, Coxeter numbers and the
// Perron-Frobenius eigenpair that supplies the face weights.
//
// Vertex numbering (all 1-based):
//   A_L      path 1-2-...-L
//   D_L      path 1-...-(L-2), leaves L-1 and L attached to L-2
//   E_n      path 1-...-(n-1), vertex n attached to n-3 (n = 6, 7, 8)
//   A_aff L  cycle 1-2-...-L-1 (the affine diagram A^(1)_{L-1}, L vertices)
//   D_aff L  leaves 1, 2 on vertex 3; path 3-...-(L-2); leaves L-1, L on
//            L-2 (the affine diagram D^(1)_{L-1}, L vertices)
//   E6_aff   path 1-...-5, 6 attached to 3, 7 attached to 6
//   E7_aff   path 1-...-7, 8 attached to 4
//   E8_aff   path 1-...-8, 9 attached to 6
// These orderings match the tabulated eigenvector rows entry by entry.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynbax/graph.hpp"

namespace dynbax {

enum class DiagramFamily { A, D, E6, E7, E8, A_aff, D_aff, E6_aff, E7_aff, E8_aff };

std::string family_name(DiagramFamily f);
bool is_affine(DiagramFamily f);

/// Family plus size parameter; L is ignored for the E types.
struct DiagramSpec {
  DiagramFamily family = DiagramFamily::A;
  int L = 0;

  /// e.g. "A5", "D6", "E6", "A_aff6", "E7_aff".
  std::string name() const;
};

/// Parses a diagram name such as "A5", "D_aff6" or "E8". Throws InputError.
DiagramSpec parse_diagram(const std::string& name);

/// Throws InputError when L is outside the family's range (A: L >= 2,
/// D: L >= 4, A_aff: L >= 3, D_aff: L >= 5).
Graph build_diagram(DiagramFamily family, int L = 0);
Graph build_diagram(const DiagramSpec& spec);

/// Coxeter number: A_L -> L+1, D_L -> 2L-2, E6 -> 12, E7 -> 18, E8 -> 30.
/// Throws UnsupportedError for affine families.
int coxeter_number(DiagramFamily family, int L = 0);

/// Diagrams listed by `graphs list` and swept by the acceptance battery.
std::vector<DiagramSpec> catalog();

inline constexpr double kDefaultPfTol = 1e-13;
inline constexpr int kMaxPfIterations = 100000;

struct PFData {
  double eigenvalue = 0.0;
  /// Entrywise positive, max entry 1.
  std::map<Vertex, double> eigenvector;
  int iterations = 0;
  /// ||Y xi - phi xi||_inf.
  double residual = 0.0;

  double at(Vertex v) const { return eigenvector.at(v); }
};

/// Power iteration on Y + I from the all-ones vector. The unit shift removes
/// the +-phi oscillation of bipartite graphs without changing eigenvectors.
/// Stops when successive Rayleigh quotients differ by less than tol and the
/// eigen-residual is below tol. Throws NumericError after 10^5 iterations.
PFData pf_eigen(const Graph& g, double tol = kDefaultPfTol);

/// Tabulated eigenvector rows (A, D, E and affine), evaluated as printed.
/// Empty when the table has no row for the diagram.
std::optional<std::vector<double>> tabulated_eigenvector(const DiagramSpec& spec);

/// Entry-wise comparison of the tabulated row against the computed vector,
/// both rescaled to max entry 1.
struct TableComparison {
  std::vector<double> tabulated;
  std::vector<double> computed;
  std::vector<double> deviation;
  double max_deviation = 0.0;
  /// 1-based positions whose deviation exceeds the tolerance.
  std::vector<int> mismatches;
};

TableComparison compare_with_table(const DiagramSpec& spec, const PFData& pf,
                                   double tol = 1e-10);

}  // namespace dynbax
