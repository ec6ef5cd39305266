#include "dynbax/suite.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include "dynbax/errors.hpp"

namespace dynbax {

namespace {

constexpr double kPi = std::numbers::pi;

class Battery {
 public:
  explicit Battery(TolProfile p) : factor_(profile_factor(p)) {}

  double tol(double t) const { return t * factor_; }
  double threshold(double t) const { return t / factor_; }

  void run(int criterion, const std::string& check, const std::string& graph,
           const std::function<Report()>& make) {
    Report r;
    try {
      r = make();
    } catch (const std::exception& e) {
      r = Report{};
      r.check = check;
      r.graph = graph;
      r.warnings.push_back(e.what());
      r.finalize();
    }
    r.param("criterion", criterion);
    reports_.push_back(std::move(r));
  }

  std::vector<Report> take() { return std::move(reports_); }

 private:
  double factor_;
  std::vector<Report> reports_;
};

Report pf_report(const std::string& check, double tol) {
  Report r;
  r.check = check;
  r.graph = "catalog";
  r.family = "adjacency";
  r.tol = tol;
  return r;
}

void perron_frobenius(Battery& b) {
  b.run(1, "pf_eigenvalue", "catalog", [&] {
    Report r = pf_report("pf_eigenvalue", b.tol(1e-10));
    ScopedTimer timer(r);
    for (const auto& s : catalog()) {
      if (is_affine(s.family)) continue;
      const PFData pf = pf_eigen(build_diagram(s));
      const double expect = 2.0 * std::cos(kPi / coxeter_number(s.family, s.L));
      r.add(std::nullopt, s.name() + " phi-2cos(pi/h)", std::abs(pf.eigenvalue - expect));
    }
    r.finalize();
    return r;
  });
  b.run(1, "pf_eigenvector_A", "catalog", [&] {
    Report r = pf_report("pf_eigenvector_A", b.tol(1e-10));
    ScopedTimer timer(r);
    for (const auto& s : catalog()) {
      if (s.family != DiagramFamily::A) continue;
      const Graph g = build_diagram(s);
      const PFData pf = pf_eigen(g);
      double dev = 0.0;
      const double top = std::sin(kPi * ((s.L + 1) / 2) / (s.L + 1));
      for (int k = 1; k <= s.L; ++k) {
        dev = std::max(dev, std::abs(pf.at(k) - std::sin(k * kPi / (s.L + 1)) / top));
      }
      r.add(std::nullopt, s.name() + " sin(k pi/(L+1))", dev);
    }
    r.finalize();
    return r;
  });
  b.run(1, "pf_affine", "catalog", [&] {
    Report r = pf_report("pf_affine", b.tol(1e-10));
    ScopedTimer timer(r);
    for (const auto& s : catalog()) {
      if (!is_affine(s.family)) continue;
      const PFData pf = pf_eigen(build_diagram(s));
      r.add(std::nullopt, s.name() + " phi-2", std::abs(pf.eigenvalue - 2.0));
      r.add(std::nullopt, s.name() + " table", compare_with_table(s, pf).max_deviation);
    }
    r.finalize();
    return r;
  });
}

void local_tl(Battery& b) {
  for (const auto& s : catalog()) {
    b.run(2, "dTL", s.name(), [&] { return check_dTL(diagram_family(s.name()), b.tol(1e-10)); });
  }
  for (LineKind k : {LineKind::Tri, LineKind::Hyp, LineKind::Ell}) {
    const double t = k == LineKind::Ell ? 1e-9 : 1e-10;
    b.run(2, "dTL", "line", [&] { return check_dTL(build_TL_line(battery_line(k)), b.tol(t)); });
  }
}

void functional(Battery& b) {
  for (const std::string d : {"A5", "E6", "D_aff5", "A_aff6"}) {
    b.run(3, "functional_relation", d, [&] {
      const TLFamily f = diagram_family(d);
      const SpectralParam p = natural_param(parse_diagram(d));
      return check_functional_relation(p, f, f.kappa, scaled_samples(p), b.tol(1e-12));
    });
  }
  for (LineKind k : {LineKind::Tri, LineKind::Hyp}) {
    b.run(3, "functional_relation", "line", [&] {
      const LineParams lp = battery_line(k);
      const TLFamily f = build_TL_line(lp);
      const double lambda = kPi / (lp.ell.L + 1);
      const SpectralParam p = k == LineKind::Tri ? tri_param(lambda) : hyp_param(lambda);
      return check_functional_relation(p, f, f.kappa, scaled_samples(p), b.tol(1e-12));
    });
  }
  b.run(3, "kappa_obstruction", "line", [&] {
    return check_kappa_obstruction(build_TL_line(battery_line(LineKind::Ell)),
                                   b.threshold(1e-3));
  });
}

void yang_baxter(Battery& b) {
  for (const std::string d : {"A5", "E6", "D_aff5", "A_aff6"}) {
    b.run(4, "dYBE", d, [&] {
      return check_dYBE(baxterize_TL(diagram_family(d), natural_param(parse_diagram(d))),
                        b.tol(1e-9));
    });
  }
  for (LineKind k : {LineKind::Tri, LineKind::Hyp}) {
    b.run(4, "dYBE", "line", [&] {
      const LineParams lp = battery_line(k);
      const double lambda = kPi / (lp.ell.L + 1);
      const SpectralParam p = k == LineKind::Tri ? tri_param(lambda) : hyp_param(lambda);
      return check_dYBE(baxterize_TL(build_TL_line(lp), p), b.tol(1e-9));
    });
  }
  b.run(4, "dYBE", "line", [&] {
    return check_dYBE(abf_family(battery_line(LineKind::Ell)), b.tol(1e-8), 5);
  });
}

void hecke(Battery& b) {
  const std::string d = "A5";
  b.run(5, "dHecke", d, [&] { return check_dHecke(hecke_from_TL(diagram_family(d)), b.tol(1e-11)); });
  b.run(5, "dYBE", d, [&] {
    const HeckeFamily h = hecke_from_TL(diagram_family(d));
    return check_dYBE(baxterize_Hecke(h, sigma_from_hecke(h)), b.tol(1e-10));
  });
  for (int N : {3, 4}) {
    b.run(5, "murphy", d, [&] { return murphy_check(hecke_from_TL(diagram_family(d)), N, b.tol(1e-10)); });
  }
}

BMWFamily battery_bmw() {
  const HeckeFamily h = hecke_from_TL(diagram_family("A5"));
  return bmw_from_hecke(h, 1.0 / h.qbar.begin()->second);
}

void bmw(Battery& b) {
  b.run(6, "dBMW", "A5", [&] { return check_dBMW(battery_bmw(), b.tol(1e-10)); });
  b.run(6, "dYBE_2param", "A5", [&] {
    return check_dYBE_2param(baxterize_BMW(battery_bmw()), default_triples(), b.tol(1e-10));
  });
}

void lattice(Battery& b) {
  const TLFamily a4 = diagram_family("A4");
  const RFamily R = baxterize_TL(a4, natural_param(parse_diagram("A4")));
  const auto basis = std::make_shared<const ClosedPathBasis>(a4.graph(), 6);
  const std::vector<double> grid{0.1, 0.2, 0.3};
  b.run(7, "basis_count", "A4", [&] { return check_basis_count(*basis, 36); });
  b.run(7, "transfer_commute", "A4", [&] { return check_commuting(R, basis, grid, grid, b.tol(1e-9)); });
  b.run(7, "transfer_commute", "A4", [&] { return check_commuting(R, basis, {0.2}, {0.5}, b.tol(1e-9)); });
  b.run(7, "transfer_at_zero", "A4", [&] { return check_translation_limit(R, basis); });
  b.run(7, "hamiltonian_commute", "A4", [&] {
    return check_conservation(a4, R, basis, {0.1, 0.3, 0.5}, b.tol(1e-9));
  });
  b.run(7, "hamiltonian_symmetric", "A4", [&] { return check_hamiltonian_symmetry(a4, basis); });
  b.run(7, "jacobi", "A4", [&] { return check_diagonalization(a4, basis, b.tol(1e-10)); });
  b.run(7, "spectrum", "A2", [&] {
    const TLFamily a2 = diagram_family("A2");
    const auto small = std::make_shared<const ClosedPathBasis>(a2.graph(), 2);
    return check_spectrum(a2, small, {2.0, 2.0}, b.tol(1e-12));
  });
}

void degeneration(Battery& b) {
  b.run(8, "degeneration", "line", [&] {
    LineParams p = battery_line(LineKind::Ell);
    p.ell.tau = Complex(0.0, 10.0);
    std::vector<std::pair<double, Vertex>> points;
    const auto grid = sample_grid(5);
    const Vertex ks[] = {3, 5, 7, 9, 11};
    for (std::size_t i = 0; i < grid.size(); ++i) points.emplace_back(grid[i].first, ks[i]);
    return check_degeneration(p, points, b.tol(1e-6));
  });
}

}  // namespace

TolProfile parse_tol_profile(const std::string& s) {
  if (s == "default") return TolProfile::Default;
  if (s == "strict") return TolProfile::Strict;
  throw InputError("unknown tolerance profile '" + s + "' (default|strict)");
}

std::string tol_profile_name(TolProfile p) {
  return p == TolProfile::Strict ? "strict" : "default";
}

double profile_factor(TolProfile p) { return p == TolProfile::Strict ? 0.1 : 1.0; }

std::string criterion_title(int criterion) {
  static const char* titles[] = {
      "",
      "Perron-Frobenius eigenvalues and eigenvectors",
      "local dynamical TL relations",
      "functional relation and elliptic obstruction",
      "dynamical Yang-Baxter equation",
      "Hecke route",
      "BMW route",
      "lattice transfer matrices and Hamiltonian",
      "trigonometric degeneration of the elliptic R-matrix",
      "deterministic suite output",
  };
  if (criterion < 1 || criterion > kCriteria) return "unknown";
  return titles[criterion];
}

TLFamily diagram_family(const std::string& diagram) {
  const DiagramSpec spec = parse_diagram(diagram);
  const Graph g = build_diagram(spec);
  return build_TL_graph(g, pf_eigen(g));
}

SpectralParam natural_param(const DiagramSpec& spec) {
  if (is_affine(spec.family)) return rational_param();
  return tri_param(kPi / coxeter_number(spec.family, spec.L));
}

LineParams battery_line(LineKind kind) {
  LineParams p;
  p.kind = kind;
  if (kind == LineKind::Ell) {
    p.ell.L = 4;
    p.ell.tau = Complex(0.0, 0.8);
  } else {
    p.ell.L = 3;
  }
  return p;
}

std::vector<Report> run_suite(TolProfile profile) {
  Battery b(profile);
  perron_frobenius(b);
  local_tl(b);
  functional(b);
  yang_baxter(b);
  hecke(b);
  bmw(b);
  lattice(b);
  degeneration(b);
  return b.take();
}

int criterion_of(const Report& r) {
  for (const auto& [k, v] : r.params) {
    if (k == "criterion") return std::stoi(v);
  }
  return 0;
}

std::vector<CriterionSummary> summarize(const std::vector<Report>& reports) {
  std::vector<CriterionSummary> out;
  for (int c = 1; c <= kCriteria; ++c) {
    CriterionSummary s;
    s.criterion = c;
    for (const auto& r : reports) {
      if (criterion_of(r) != c) continue;
      ++s.checks;
      if (!r.pass) ++s.failed;
    }
    if (s.checks > 0) out.push_back(s);
  }
  return out;
}

std::string summary_table(const std::vector<Report>& reports) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-22s %-10s %-28s %-24s %-10s %s\n", "crit",
                "check", "graph", "family", "max_residual", "tol", "status");
  os << line;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-4d %-22s %-10s %-28s %-24.17g %-10.3g %s\n",
                  criterion_of(r), r.check.c_str(), r.graph.c_str(),
                  r.family.substr(0, 28).c_str(), r.max_residual, r.tol,
                  r.pass ? "PASS" : "FAIL");
    os << line;
    if (r.pass) ++passed;
  }
  os << passed << "/" << reports.size() << " checks passed\n";
  return os.str();
}

std::string strip_timing(const std::string& json_text) {
  std::istringstream in(json_text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"wall_time_ms\"") != std::string::npos) continue;
    out << line << '\n';
  }
  return out.str();
}

}  // namespace dynbax
