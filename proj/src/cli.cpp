#include "dynbax/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynbax/errors.hpp"
#include "dynbax/family_io.hpp"
#include "dynbax/suite.hpp"

namespace dynbax {

namespace {

struct Options {
  // family source
  std::string graph;
  std::string graph_file;
  std::string family_file;
  int L = 0;
  std::string tau;
  double shift_b = 0.2024;
  std::string window;
  // spectral data
  std::string param;
  std::string route = "tl";
  std::string z;
  std::string w;
  std::string u1, u2, u3;
  std::string nubar;
  int samples = 0;
  int sites = 0;
  double tol = 0.0;
  // output
  bool json = false;
  bool csv = false;
  std::string out;
  // subcommand specific
  std::string check;
  std::string kind = "tl";
  std::string profile = "default";
  bool check_commute = false;
  bool diagonalize = false;
  std::string spectra_csv;
  std::string matrix_csv;
};

bool is_line_name(const std::string& g) { return g == "tri" || g == "hyp" || g == "ell"; }

std::pair<int, int> parse_window(const std::string& s) {
  int lo = 0, hi = 0;
  char sep = 0;
  std::istringstream in(s);
  if (!(in >> lo >> sep >> hi) || (sep != ',' && sep != ':') || !in.eof()) {
    throw InputError("--window expects LO,HI (got '" + s + "')");
  }
  return {lo, hi};
}

LineParams line_params(const Options& o, LineKind kind) {
  LineParams p = battery_line(kind);
  if (o.L > 0) p.ell.L = o.L;
  if (!o.tau.empty()) p.ell.tau = parse_complex(o.tau);
  p.ell.shift_b = o.shift_b;
  if (!o.window.empty()) std::tie(p.lo, p.hi) = parse_window(o.window);
  if (p.kind == LineKind::Ell) p.ell.validate();
  return p;
}

std::optional<LineParams> requested_line(const Options& o) {
  if (!is_line_name(o.graph)) return std::nullopt;
  return line_params(o, parse_line_kind(o.graph));
}

DiagramSpec diagram_spec(const Options& o) {
  std::string name = o.graph;
  const bool has_digit =
      std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isdigit(c); });
  if (!has_digit && o.L > 0) name += std::to_string(o.L);
  return parse_diagram(name);
}

std::string file_stem(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

int source_count(const Options& o) {
  return !o.graph.empty() + !o.graph_file.empty() + !o.family_file.empty();
}

void require_one_source(const Options& o) {
  const int n = source_count(o);
  if (n == 0) throw InputError("one of --graph, --graph-file or --family-file is required");
  if (n > 1) throw InputError("--graph, --graph-file and --family-file are exclusive");
}

std::optional<FamilyFile> family_file(const Options& o) {
  if (o.family_file.empty()) return std::nullopt;
  return read_family_file(o.family_file);
}

TLFamily tl_family(const Options& o) {
  require_one_source(o);
  if (auto f = family_file(o)) {
    if (f->kind() == FamilyFileKind::Hecke) return tl_from_hecke(hecke_from_file(*f));
    return tl_from_file(*f, file_stem(o.family_file));
  }
  if (auto lp = requested_line(o)) return build_TL_line(*lp);
  if (!o.graph_file.empty()) {
    Graph g = read_edge_list_file(o.graph_file);
    g.set_name(file_stem(o.graph_file));
    return build_TL_graph(g, pf_eigen(g));
  }
  const DiagramSpec spec = diagram_spec(o);
  return diagram_family(spec.name());
}

HeckeFamily hecke_family(const Options& o) {
  if (auto f = family_file(o)) {
    if (f->kind() == FamilyFileKind::Hecke) return hecke_from_file(*f, file_stem(o.family_file));
  }
  return hecke_from_TL(tl_family(o));
}

BMWFamily bmw_family(const Options& o) {
  if (auto f = family_file(o)) {
    if (f->kind() == FamilyFileKind::BMW) return bmw_from_file(*f, file_stem(o.family_file));
  }
  const HeckeFamily h = hecke_family(o);
  if (h.qbar.empty()) throw InputError("family has no vertices");
  const Complex nu = o.nubar.empty() ? 1.0 / h.qbar.begin()->second : parse_complex(o.nubar);
  return bmw_from_hecke(h, nu);
}

Complex reference_kappa(const TLFamily& f) {
  for (Vertex v : f.complete) {
    auto it = f.kappa.find(v);
    if (it != f.kappa.end()) return it->second;
  }
  throw InputError("family has no complete vertex with a kappa value");
}

/// Explicit --param, else the parameterization matching kappa: rational at
/// kappa = 2, hyp above, tri below (line families keep their own kind).
SpectralParam spectral_param(const Options& o, const TLFamily& f) {
  const Complex kappa = reference_kappa(f);
  std::string name = o.param;
  if (name.empty()) {
    if (f.name == "tri" || f.name == "hyp") {
      name = f.name;
    } else if (std::abs(kappa - 2.0) < 1e-10) {
      name = "rational";
    } else {
      name = kappa.real() > 2.0 ? "hyp" : "tri";
    }
  }
  if (name == "rational") return rational_param();
  const double k = kappa.real();
  if (std::abs(kappa.imag()) > 1e-12) {
    throw InputError("--param " + name + " needs a real kappa (got " + format_complex(kappa) + ")");
  }
  if (name == "tri") {
    if (!(std::abs(k) < 2.0)) throw InputError("--param tri needs |kappa| < 2");
    return tri_param(std::acos(k / 2.0));
  }
  if (name == "hyp") {
    if (!(k > 2.0)) throw InputError("--param hyp needs kappa > 2");
    return hyp_param(std::acosh(k / 2.0));
  }
  throw InputError("unknown --param '" + name + "' (tri|hyp|rational)");
}

double tol_or(const Options& o, double fallback) { return o.tol > 0.0 ? o.tol : fallback; }

/// (z, w) samples: the explicit pair when --z is given, else the default
/// sweep in the natural units of the family.
std::vector<std::pair<Complex, Complex>> samples(const Options& o, double scale,
                                                 int default_n) {
  if (!o.z.empty()) {
    const Complex z = parse_complex(o.z);
    const Complex w = o.w.empty() ? z / 2.0 : parse_complex(o.w);
    return {{z, w}};
  }
  std::vector<std::pair<Complex, Complex>> out;
  for (auto [x, y] : sample_grid(o.samples > 0 ? o.samples : default_n)) {
    out.emplace_back(scale * x, scale * y);
  }
  return out;
}

RFamily r_family(const Options& o, const TLFamily& tl) {
  if (o.route == "hecke") {
    const HeckeFamily h = hecke_family(o);
    return baxterize_Hecke(h, sigma_from_hecke(h));
  }
  if (o.route != "tl") throw InputError("unknown --route '" + o.route + "' (tl|hecke)");
  return baxterize_TL(tl, spectral_param(o, tl));
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("cannot write " + path);
}

int emit(const std::vector<Report>& reports, const Options& o, std::ostream& out,
         bool single) {
  std::string text;
  if (o.json) {
    text = single ? to_json(reports.front()) + "\n" : suite_to_json(reports) + "\n";
  } else if (o.csv) {
    text = to_csv(reports);
  } else {
    for (const auto& r : reports) {
      text += to_text(r) + "\n";
      for (const auto& w : r.warnings) text += "  warning: " + w + "\n";
    }
  }
  write_text(text, o.out, out);
  for (const auto& r : reports) {
    if (!r.pass) return kExitFail;
  }
  return kExitPass;
}

Report verify_one(const Options& o) {
  const std::string& c = o.check;
  if (c == "tl") return check_dTL(tl_family(o), tol_or(o, 1e-10));
  if (c == "hecke") return check_dHecke(hecke_family(o), tol_or(o, 1e-11));
  if (c == "bmw") return check_dBMW(bmw_family(o), tol_or(o, 1e-10));
  if (c == "global") return check_global(tl_family(o), o.sites > 0 ? o.sites : 3, tol_or(o, 1e-10));
  if (c == "global-hecke") {
    return check_global_hecke(hecke_family(o), o.sites > 0 ? o.sites : 4, tol_or(o, 1e-10));
  }
  if (c == "murphy") return murphy_check(hecke_family(o), o.sites > 0 ? o.sites : 4, tol_or(o, 1e-10));
  if (c == "diagram") {
    return check_diagram_algebra(tl_family(o), o.sites > 0 ? o.sites : 3, tol_or(o, 1e-10));
  }
  if (c == "relation") {
    const TLFamily tl = tl_family(o);
    const SpectralParam f = spectral_param(o, tl);
    return check_functional_relation(f, tl, tl.kappa, samples(o, f.scale, 20), tol_or(o, 1e-12));
  }
  if (c == "obstruction") return check_kappa_obstruction(tl_family(o), tol_or(o, 1e-3));
  if (c == "ybe") {
    const TLFamily tl = tl_family(o);
    const RFamily R = r_family(o, tl);
    return check_dYBE(R, samples(o, R.scale, 20), tol_or(o, 1e-9));
  }
  if (c == "ybe2") {
    std::vector<std::array<double, 3>> triples = default_triples();
    if (!o.u1.empty() || !o.u2.empty() || !o.u3.empty()) {
      if (o.u1.empty() || o.u2.empty() || o.u3.empty()) {
        throw InputError("--u1, --u2 and --u3 go together");
      }
      triples = {{std::stod(o.u1), std::stod(o.u2), std::stod(o.u3)}};
    }
    return check_dYBE_2param(baxterize_BMW(bmw_family(o)), triples, tol_or(o, 1e-10));
  }
  if (c == "abf") {
    if (!o.graph.empty() && o.graph != "ell") throw InputError("verify abf runs on --graph ell");
    const RFamily R = abf_family(line_params(o, LineKind::Ell));
    return check_dYBE(R, samples(o, R.scale, 5), tol_or(o, 1e-8));
  }
  if (c == "degeneration") {
    if (!o.graph.empty() && o.graph != "ell") {
      throw InputError("verify degeneration runs on --graph ell");
    }
    Options d = o;
    if (d.tau.empty()) d.tau = "0+10i";
    const LineParams p = line_params(d, LineKind::Ell);
    // Odd offsets 2, 4, ... from the lower end keep every base interior.
    std::vector<std::pair<double, Vertex>> points;
    const auto grid = sample_grid(5);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double z = o.z.empty() ? grid[i].first : parse_complex(o.z).real();
      points.emplace_back(z, p.lo + 2 + static_cast<Vertex>(2 * i) % (p.hi - p.lo - 3));
    }
    return check_degeneration(p, points, tol_or(o, 1e-6));
  }
  throw InputError("unknown check '" + c + "'");
}

BasisPtr lattice_basis(const Options& o, const TLFamily& tl) {
  return std::make_shared<const ClosedPathBasis>(tl.graph(), o.sites > 0 ? o.sites : 4);
}

int cmd_transfer(const Options& o, std::ostream& out) {
  const TLFamily tl = tl_family(o);
  const RFamily R = r_family(o, tl);
  const BasisPtr basis = lattice_basis(o, tl);
  const Complex z = o.z.empty() ? Complex(0.2) : parse_complex(o.z);
  const Complex w = o.w.empty() ? Complex(0.5) : parse_complex(o.w);
  std::vector<Report> reports;
  reports.push_back(check_translation_limit(R, basis));
  if (o.check_commute) {
    if (z.imag() != 0.0 || w.imag() != 0.0) {
      throw InputError("--check-commute takes real --z and --w");
    }
    reports.push_back(check_commuting(R, basis, {z.real()}, {w.real()}, tol_or(o, 1e-9)));
  }
  if (!o.matrix_csv.empty()) {
    const LatticeOperator M = transfer_matrix(R, z, basis);
    std::string text = "row,col,re,im\n";
    for (Eigen::Index c = 0; c < M.matrix.cols(); ++c) {
      for (Eigen::Index r = 0; r < M.matrix.rows(); ++r) {
        const Complex x = M.matrix(r, c);
        if (x == 0.0) continue;
        text += std::to_string(r) + "," + std::to_string(c) + "," + format_double(x.real()) +
                "," + format_double(x.imag()) + "\n";
      }
    }
    write_text(text, o.matrix_csv, out);
  }
  return emit(reports, o, out, false);
}

int cmd_chain(const Options& o, std::ostream& out) {
  const TLFamily tl = tl_family(o);
  const BasisPtr basis = lattice_basis(o, tl);
  std::vector<Report> reports;
  reports.push_back(check_hamiltonian_symmetry(tl, basis));
  if (o.check_commute) {
    std::vector<double> ws{0.1, 0.3, 0.5};
    if (!o.w.empty()) ws = {parse_complex(o.w).real()};
    reports.push_back(check_conservation(tl, r_family(o, tl), basis, ws, tol_or(o, 1e-9)));
  }
  std::optional<Spectrum> spectrum;
  if (o.diagonalize) {
    reports.push_back(check_diagonalization(tl, basis, tol_or(o, 1e-10)));
    spectrum = diagonalize(hamiltonian(tl, basis));
  }
  const int code = emit(reports, o, out, false);
  if (spectrum) {
    std::string text = "index,eigenvalue\n";
    for (Eigen::Index i = 0; i < spectrum->values.size(); ++i) {
      text += std::to_string(i) + "," + format_double(spectrum->values(i)) + "\n";
    }
    if (!o.spectra_csv.empty()) {
      write_text(text, o.spectra_csv, out);
    } else if (!o.json && !o.csv && o.out.empty()) {
      out << text;
    }
  }
  return code;
}

int cmd_build(const Options& o, std::ostream& out) {
  std::string text;
  if (o.kind == "tl") {
    text = family_to_json(tl_family(o));
  } else if (o.kind == "hecke") {
    text = family_to_json(hecke_family(o));
  } else if (o.kind == "bmw") {
    text = family_to_json(bmw_family(o));
  } else {
    throw InputError("unknown --kind '" + o.kind + "' (tl|hecke|bmw)");
  }
  write_text(text + "\n", o.out, out);
  return kExitPass;
}

int cmd_graphs(const Options& o, std::ostream& out) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::ostringstream table;
  char line[160];
  std::snprintf(line, sizeof line, "%-8s %8s %5s %4s %-22s %-22s\n", "graph", "vertices",
                "edges", "h", "phi", "2cos(pi/h)");
  table << line;
  for (const auto& s : catalog()) {
    const Graph g = build_diagram(s);
    const PFData pf = pf_eigen(g);
    nlohmann::ordered_json e;
    e["name"] = s.name();
    e["vertices"] = g.size();
    e["edges"] = g.edges().size();
    std::string h = "-";
    std::string ref = "-";
    if (is_affine(s.family)) {
      e["coxeter"] = nullptr;
    } else {
      const int cox = coxeter_number(s.family, s.L);
      e["coxeter"] = cox;
      h = std::to_string(cox);
      ref = format_double(2.0 * std::cos(std::acos(-1.0) / cox));
    }
    e["phi"] = pf.eigenvalue;
    nlohmann::ordered_json vec = nlohmann::ordered_json::array();
    for (Vertex v : g.vertices()) vec.push_back(pf.at(v));
    e["eigenvector"] = vec;
    arr.push_back(e);
    std::snprintf(line, sizeof line, "%-8s %8zu %5zu %4s %-22s %-22s\n", s.name().c_str(),
                  g.size(), g.edges().size(), h.c_str(), format_double(pf.eigenvalue).c_str(),
                  ref.c_str());
    table << line;
  }
  write_text(o.json ? arr.dump(2) + "\n" : table.str(), o.out, out);
  return kExitPass;
}

int cmd_suite(const Options& o, std::ostream& out) {
  const TolProfile profile = parse_tol_profile(o.profile);
  const std::vector<Report> reports = run_suite(profile);
  std::string text;
  if (o.json) {
    text = suite_to_json(reports) + "\n";
  } else if (o.csv) {
    text = to_csv(reports);
  } else {
    text = summary_table(reports);
    for (const auto& s : summarize(reports)) {
      text += "criterion " + std::to_string(s.criterion) + " (" +
              criterion_title(s.criterion) + "): " + (s.pass() ? "PASS" : "FAIL") + " " +
              std::to_string(s.checks - s.failed) + "/" + std::to_string(s.checks) + "\n";
    }
  }
  write_text(text, o.out, out);
  for (const auto& r : reports) {
    if (!r.pass) return kExitFail;
  }
  return kExitPass;
}

void add_source(CLI::App* app, Options& o) {
  app->add_option("--graph", o.graph,
                  "Catalog diagram (A5, E6, D_aff5, ...) or line family tri|hyp|ell");
  app->add_option("--graph-file", o.graph_file, "Edge list file, one 'u v' pair per line");
  app->add_option("--family-file", o.family_file, "JSON operator family file");
  app->add_option("--L", o.L, "Size of a sized diagram, or the level of a line family");
  app->add_option("--tau", o.tau, "Elliptic modulus as RE+IMi (default 0+0.8i)");
  app->add_option("--shift-b", o.shift_b, "Line offset b (objects k + b)")->capture_default_str();
  app->add_option("--window", o.window, "Line window LO,HI (default 1,13)");
}

void add_spectral(CLI::App* app, Options& o) {
  app->add_option("--param", o.param, "Spectral parameterization tri|hyp|rational")
      ->check(CLI::IsMember({"tri", "hyp", "rational"}));
  app->add_option("--route", o.route, "Baxterization route tl|hecke")
      ->check(CLI::IsMember({"tl", "hecke"}))
      ->capture_default_str();
  app->add_option("--z", o.z, "Spectral parameter z (RE+IMi)");
  app->add_option("--w", o.w, "Second spectral parameter w (RE+IMi)");
}

void add_output(CLI::App* app, Options& o) {
  app->add_flag("--json", o.json, "Emit JSON");
  app->add_flag("--csv", o.csv, "Emit CSV rows")->excludes("--json");
  app->add_option("--out", o.out, "Write output to a file instead of stdout");
  app->add_option("--tol", o.tol, "Tolerance override")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dynamical Temperley-Lieb, Hecke and BMW families: construction and verification"};
  app.name("dynbax");
  app.require_subcommand(1);

  auto* graphs = app.add_subcommand("graphs", "Catalog of diagrams with h and phi(Y)");
  std::string graphs_action;
  graphs->add_option("action", graphs_action, "list")->required()->check(CLI::IsMember({"list"}));
  graphs->add_flag("--json", o.json, "Emit JSON");
  graphs->add_option("--out", o.out, "Write output to a file");

  auto* build = app.add_subcommand("build", "Build an operator family and write it as JSON");
  add_source(build, o);
  build->add_option("--kind", o.kind, "tl|hecke|bmw")->capture_default_str();
  build->add_option("--nubar", o.nubar, "nubar of the Hecke-degenerate BMW family");
  build->add_option("--out", o.out, "Write output to a file");

  auto* verify = app.add_subcommand("verify", "Run one relation checker");
  verify->add_option("check", o.check, "Relation to check")
      ->required()
      ->check(CLI::IsMember({"tl", "hecke", "bmw", "global", "global-hecke", "murphy",
                             "diagram", "relation", "obstruction", "ybe", "ybe2", "abf",
                             "degeneration"}));
  add_source(verify, o);
  add_spectral(verify, o);
  add_output(verify, o);
  verify->add_option("--u1", o.u1, "BMW spectral parameter u1");
  verify->add_option("--u2", o.u2, "BMW spectral parameter u2");
  verify->add_option("--u3", o.u3, "BMW spectral parameter u3");
  verify->add_option("--nubar", o.nubar, "nubar of the Hecke-degenerate BMW family");
  verify->add_option("--sites", o.sites, "Tensor order N for global, murphy, diagram")
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", o.samples, "Size of the default (z, w) sweep")
      ->check(CLI::PositiveNumber);

  auto* transfer = app.add_subcommand("transfer", "Row transfer matrix on closed paths");
  add_source(transfer, o);
  add_spectral(transfer, o);
  add_output(transfer, o);
  transfer->add_option("--sites", o.sites, "Number of sites N (default 4)")
      ->check(CLI::PositiveNumber);
  transfer->add_flag("--check-commute", o.check_commute, "Check [M(z), M(w)] = 0");
  transfer->add_option("--matrix-csv", o.matrix_csv, "Write nonzero entries of M(z)");

  auto* chain = app.add_subcommand("chain", "Periodic TL spin-chain Hamiltonian");
  add_source(chain, o);
  add_spectral(chain, o);
  chain->add_flag("--json", o.json, "Emit JSON reports");
  chain->add_option("--out", o.out, "Write reports to a file");
  chain->add_option("--tol", o.tol, "Tolerance override")->check(CLI::PositiveNumber);
  chain->add_option("--sites", o.sites, "Number of sites N (default 4)")
      ->check(CLI::PositiveNumber);
  chain->add_flag("--check-commute", o.check_commute, "Check [H, M(w)] = 0");
  chain->add_flag("--diagonalize", o.diagonalize, "Jacobi spectrum of H");
  chain->add_option("--csv", o.spectra_csv, "Write the spectrum as index,eigenvalue");

  auto* suite = app.add_subcommand("suite", "Full acceptance battery");
  suite->add_option("--tol-profile", o.profile, "default|strict")
      ->check(CLI::IsMember({"default", "strict"}))
      ->capture_default_str();
  suite->add_flag("--json", o.json, "Emit JSON");
  suite->add_flag("--csv", o.csv, "Emit CSV rows")->excludes("--json");
  suite->add_option("--out", o.out, "Write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*graphs) return cmd_graphs(o, out);
    if (*build) return cmd_build(o, out);
    if (*verify) return emit({verify_one(o)}, o, out, true);
    if (*transfer) return cmd_transfer(o, out);
    if (*chain) return cmd_chain(o, out);
    if (*suite) return cmd_suite(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace dynbax
