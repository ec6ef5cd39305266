#include "dynbax/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "dynbax/errors.hpp"

namespace dynbax {

namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

std::vector<Vertex> range1(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return v;
}

Edges chain(int from, int to) {
  Edges e;
  for (int i = from; i < to; ++i) e.emplace_back(i, i + 1);
  return e;
}

}  // namespace

std::string family_name(DiagramFamily f) {
  switch (f) {
    case DiagramFamily::A: return "A";
    case DiagramFamily::D: return "D";
    case DiagramFamily::E6: return "E6";
    case DiagramFamily::E7: return "E7";
    case DiagramFamily::E8: return "E8";
    case DiagramFamily::A_aff: return "A_aff";
    case DiagramFamily::D_aff: return "D_aff";
    case DiagramFamily::E6_aff: return "E6_aff";
    case DiagramFamily::E7_aff: return "E7_aff";
    case DiagramFamily::E8_aff: return "E8_aff";
  }
  return "?";
}

bool is_affine(DiagramFamily f) {
  switch (f) {
    case DiagramFamily::A_aff:
    case DiagramFamily::D_aff:
    case DiagramFamily::E6_aff:
    case DiagramFamily::E7_aff:
    case DiagramFamily::E8_aff:
      return true;
    default:
      return false;
  }
}

namespace {

bool sized(DiagramFamily f) {
  return f == DiagramFamily::A || f == DiagramFamily::D ||
         f == DiagramFamily::A_aff || f == DiagramFamily::D_aff;
}

}  // namespace

std::string DiagramSpec::name() const {
  return sized(family) ? family_name(family) + std::to_string(L)
                       : family_name(family);
}

DiagramSpec parse_diagram(const std::string& name) {
  static const std::vector<std::pair<std::string, DiagramFamily>> fixed = {
      {"E6_aff", DiagramFamily::E6_aff}, {"E7_aff", DiagramFamily::E7_aff},
      {"E8_aff", DiagramFamily::E8_aff}, {"E6", DiagramFamily::E6},
      {"E7", DiagramFamily::E7},         {"E8", DiagramFamily::E8}};
  for (const auto& [n, f] : fixed) {
    if (name == n) return {f, 0};
  }
  static const std::vector<std::pair<std::string, DiagramFamily>> prefixes = {
      {"A_aff", DiagramFamily::A_aff},
      {"D_aff", DiagramFamily::D_aff},
      {"A", DiagramFamily::A},
      {"D", DiagramFamily::D}};
  for (const auto& [p, f] : prefixes) {
    if (name.rfind(p, 0) != 0) continue;
    const std::string digits = name.substr(p.size());
    if (digits.empty() || digits.size() > 4 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      break;
    }
    return {f, std::stoi(digits)};
  }
  throw InputError("unknown diagram '" + name +
                   "' (expected e.g. A5, D6, E6, A_aff6, D_aff5, E7_aff)");
}

Graph build_diagram(DiagramFamily family, int L) {
  auto need = [&](int min) {
    if (L < min) {
      throw InputError(family_name(family) + " requires L >= " +
                       std::to_string(min) + ", got " + std::to_string(L));
    }
  };
  Graph g;
  switch (family) {
    case DiagramFamily::A:
      need(2);
      g = Graph(range1(L), chain(1, L));
      break;
    case DiagramFamily::D: {
      need(4);
      Edges e = chain(1, L - 2);
      e.emplace_back(L - 2, L - 1);
      e.emplace_back(L - 2, L);
      g = Graph(range1(L), e);
      break;
    }
    case DiagramFamily::E6:
    case DiagramFamily::E7:
    case DiagramFamily::E8: {
      const int n = family == DiagramFamily::E6   ? 6
                    : family == DiagramFamily::E7 ? 7
                                                  : 8;
      Edges e = chain(1, n - 1);
      e.emplace_back(n - 3, n);
      g = Graph(range1(n), e);
      break;
    }
    case DiagramFamily::A_aff: {
      need(3);
      Edges e = chain(1, L);
      e.emplace_back(L, 1);
      g = Graph(range1(L), e);
      break;
    }
    case DiagramFamily::D_aff: {
      need(5);
      Edges e = chain(3, L - 2);
      e.emplace_back(1, 3);
      e.emplace_back(2, 3);
      e.emplace_back(L - 2, L - 1);
      e.emplace_back(L - 2, L);
      g = Graph(range1(L), e);
      break;
    }
    case DiagramFamily::E6_aff: {
      Edges e = chain(1, 5);
      e.emplace_back(3, 6);
      e.emplace_back(6, 7);
      g = Graph(range1(7), e);
      break;
    }
    case DiagramFamily::E7_aff: {
      Edges e = chain(1, 7);
      e.emplace_back(4, 8);
      g = Graph(range1(8), e);
      break;
    }
    case DiagramFamily::E8_aff: {
      Edges e = chain(1, 8);
      e.emplace_back(6, 9);
      g = Graph(range1(9), e);
      break;
    }
  }
  g.set_name(DiagramSpec{family, sized(family) ? L : 0}.name());
  return g;
}

Graph build_diagram(const DiagramSpec& spec) {
  return build_diagram(spec.family, spec.L);
}

int coxeter_number(DiagramFamily family, int L) {
  switch (family) {
    case DiagramFamily::A:
      if (L < 2) throw InputError("A requires L >= 2");
      return L + 1;
    case DiagramFamily::D:
      if (L < 4) throw InputError("D requires L >= 4");
      return 2 * L - 2;
    case DiagramFamily::E6: return 12;
    case DiagramFamily::E7: return 18;
    case DiagramFamily::E8: return 30;
    default:
      throw UnsupportedError("no Coxeter number for affine diagram " +
                             family_name(family));
  }
}

std::vector<DiagramSpec> catalog() {
  std::vector<DiagramSpec> out;
  for (int L = 2; L <= 8; ++L) out.push_back({DiagramFamily::A, L});
  for (int L = 4; L <= 8; ++L) out.push_back({DiagramFamily::D, L});
  out.push_back({DiagramFamily::E6, 0});
  out.push_back({DiagramFamily::E7, 0});
  out.push_back({DiagramFamily::E8, 0});
  for (int L = 3; L <= 8; ++L) out.push_back({DiagramFamily::A_aff, L});
  for (int L = 5; L <= 8; ++L) out.push_back({DiagramFamily::D_aff, L});
  out.push_back({DiagramFamily::E6_aff, 0});
  out.push_back({DiagramFamily::E7_aff, 0});
  out.push_back({DiagramFamily::E8_aff, 0});
  return out;
}

PFData pf_eigen(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  const Eigen::MatrixXd y = g.adjacency();
  const Eigen::MatrixXd shifted =
      y + Eigen::MatrixXd::Identity(y.rows(), y.cols());
  Eigen::VectorXd x = Eigen::VectorXd::Ones(y.rows());
  double rayleigh = x.dot(y * x) / x.squaredNorm();
  for (int it = 1; it <= kMaxPfIterations; ++it) {
    x = shifted * x;
    x /= x.maxCoeff();
    const Eigen::VectorXd yx = y * x;
    const double next = x.dot(yx) / x.squaredNorm();
    const double res = (yx - next * x).lpNorm<Eigen::Infinity>();
    const bool settled = std::abs(next - rayleigh) < tol && res < tol;
    rayleigh = next;
    if (settled) {
      PFData out;
      out.eigenvalue = rayleigh;
      out.iterations = it;
      out.residual = res;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const double v = x(static_cast<Eigen::Index>(i));
        if (!(v > 0.0)) {
          throw NumericError("Perron-Frobenius vector is not positive");
        }
        out.eigenvector.emplace(g.vertices()[i], v);
      }
      return out;
    }
  }
  throw NumericError("power iteration did not converge within 10^5 iterations");
}

std::optional<std::vector<double>> tabulated_eigenvector(const DiagramSpec& spec) {
  using std::cos;
  using std::numbers::pi;
  using std::sin;
  const int L = spec.L;
  switch (spec.family) {
    case DiagramFamily::A: {
      std::vector<double> v;
      for (int k = 1; k <= L; ++k) v.push_back(sin(k * pi / (L + 1)));
      return v;
    }
    case DiagramFamily::D: {
      std::vector<double> v;
      for (int k = L - 2; k >= 1; --k) v.push_back(2 * cos(k * pi / (2 * L - 2)));
      v.push_back(1.0);
      v.push_back(1.0);
      return v;
    }
    // The E rows are reproduced exactly as printed, including entries that
    // do not satisfy the eigen-equation; compare_with_table reports them.
    case DiagramFamily::E6:
      return std::vector<double>{
          sin(pi / 12), sin(pi / 6), sin(pi / 4),
          sin(pi / 3) - sin(pi / 4) / (2 * cos(pi / 12)),
          sin(5 * pi / 12) - sin(pi / 4), sin(pi / 4) / (2 * cos(pi / 18))};
    case DiagramFamily::E7:
      return std::vector<double>{
          sin(pi / 18), sin(pi / 9), sin(pi / 6), sin(2 * pi / 9),
          sin(2 * pi / 18) - sin(2 * pi / 9) / (2 * cos(pi / 18)),
          sin(pi / 3) - sin(2 * pi / 9), sin(2 * pi / 9) / (2 * cos(pi / 30))};
    case DiagramFamily::E8:
      return std::vector<double>{
          sin(pi / 30), sin(pi / 15), sin(pi / 10), sin(2 * pi / 15),
          sin(pi / 6), sin(pi / 5) - sin(pi / 6) / (2 * cos(pi / 30)),
          sin(7 * pi / 30) - sin(pi / 6), sin(pi / 6) / (2 * cos(pi / 30))};
    case DiagramFamily::A_aff:
      return std::vector<double>(static_cast<std::size_t>(L), 1.0);
    case DiagramFamily::D_aff: {
      std::vector<double> v(static_cast<std::size_t>(L), 2.0);
      v[0] = v[1] = v[static_cast<std::size_t>(L - 2)] =
          v[static_cast<std::size_t>(L - 1)] = 1.0;
      return v;
    }
    case DiagramFamily::E6_aff: return std::vector<double>{1, 2, 3, 2, 1, 2, 1};
    case DiagramFamily::E7_aff: return std::vector<double>{1, 2, 3, 4, 3, 2, 1, 2};
    case DiagramFamily::E8_aff:
      return std::vector<double>{1, 2, 3, 4, 5, 6, 4, 2, 3};
  }
  return std::nullopt;
}

TableComparison compare_with_table(const DiagramSpec& spec, const PFData& pf,
                                   double tol) {
  auto row = tabulated_eigenvector(spec);
  if (!row) throw UnsupportedError("no tabulated eigenvector for " + spec.name());
  if (row->size() != pf.eigenvector.size()) {
    throw InputError("tabulated row length does not match the graph");
  }
  TableComparison c;
  const double tmax = *std::max_element(row->begin(), row->end());
  double cmax = 0.0;
  for (auto& [v, s] : pf.eigenvector) cmax = std::max(cmax, s);
  std::size_t k = 0;
  for (auto& [v, s] : pf.eigenvector) {
    const double t = (*row)[k] / tmax;
    const double x = s / cmax;
    c.tabulated.push_back(t);
    c.computed.push_back(x);
    c.deviation.push_back(std::abs(t - x));
    c.max_deviation = std::max(c.max_deviation, std::abs(t - x));
    if (std::abs(t - x) > tol) c.mismatches.push_back(static_cast<int>(k) + 1);
    ++k;
  }
  return c;
}

}  // namespace dynbax
