#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dynbax/errors.hpp"
#include "dynbax/suite.hpp"
#include "oracles.hpp"

using namespace dynbax;

namespace {

constexpr double kPi = std::numbers::pi;

/// Dense dYBE residual at base a from entry-by-entry order-3 matrices.
double dense_dybe(const RFamily& R, Vertex a, Complex z, Complex w) {
  const auto& g = R.graph();
  auto leg = [&](Complex x, int first) {
    return oracle::order3_leg(*R.cache, R.at(x, g.vertices()), a, first);
  };
  const Eigen::MatrixXcd lhs = leg(z - w, 2) * leg(z, 1) * leg(w, 2);
  const Eigen::MatrixXcd rhs = leg(w, 1) * leg(z, 2) * leg(z - w, 1);
  return oracle::max_abs(lhs - rhs);
}

}  // namespace

TEST_SUITE("baxterization") {

TEST_CASE("sample grid is the Halton sequence on (0.05, 0.45)^2") {
  const auto s = sample_grid(3);
  REQUIRE(s.size() == 3);
  const double hx[] = {0.5, 0.25, 0.75};
  const double hy[] = {1.0 / 3, 2.0 / 3, 1.0 / 9};
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(s[i].first - (0.05 + 0.4 * hx[i])) < 1e-15);
    CHECK(std::abs(s[i].second - (0.05 + 0.4 * hy[i])) < 1e-15);
  }
  CHECK(sample_grid().size() == 20);
  CHECK(sample_grid(20) == sample_grid(20));
}

TEST_CASE("parameterizations") {
  const SpectralParam t = tri_param(kPi / 4);
  CHECK(t(0.0) == Complex(0.0));
  CHECK(std::abs(t(0.2) - std::sin(0.2) / std::sin(kPi / 4 - 0.2)) < 1e-15);
  CHECK(t.pole_distance(kPi / 4) < 1e-15);
  CHECK(t.scale == doctest::Approx(kPi / 4));
  const SpectralParam h = hyp_param(0.5);
  CHECK(std::abs(h(0.2) - std::sinh(0.2) / std::sinh(0.3)) < 1e-15);
  const SpectralParam r = rational_param();
  CHECK(std::abs(r(0.25) - 1.0 / 3.0) < 1e-15);
  CHECK(r.pole_distance(1.0) == 0.0);
  CHECK_THROWS_AS(param_by_name("cosh", 1.0), InputError);
}

TEST_CASE("functional relation") {
  const SpectralParam t = tri_param(kPi / 4);
  CHECK(functional_residual(t, 2 * std::cos(kPi / 4), 0.2, 0.5) < 1e-12);
  CHECK(functional_residual(t, 2 * std::cos(kPi / 4), 0.3, 0.3) == 0.0);
  CHECK(functional_residual(rational_param(), 2.0, 0.1, 0.35) < 1e-14);
  CHECK(functional_residual(hyp_param(0.7), 2 * std::cosh(0.7), 0.2, 0.4) < 1e-13);
  CHECK(functional_residual(t, 1.0, 0.2, 0.5) > 1e-3);
}

TEST_CASE("constant kappa makes both conditions identical") {
  const TLFamily f = diagram_family("E6");
  const SpectralParam p = natural_param(parse_diagram("E6"));
  const Report r = check_functional_relation(p, f, f.kappa, scaled_samples(p), 1e-12);
  CHECK(r.pass);
  for (std::size_t i = 0; i + 1 < r.per_vertex.size(); i += 2) {
    CHECK(r.per_vertex[i].relation == "kappa(a)");
    CHECK(r.per_vertex[i + 1].relation == "kappa(ah1)");
    CHECK(r.per_vertex[i].residual == r.per_vertex[i + 1].residual);
  }
}

TEST_CASE("pole samples are skipped with a warning") {
  const TLFamily f = diagram_family("A3");
  const SpectralParam p = tri_param(kPi / 4);
  const Report r = check_functional_relation(p, f, f.kappa, {{kPi / 4, 0.1}, {0.1, 0.2}}, 1e-12);
  CHECK(r.pass);
  CHECK_FALSE(r.warnings.empty());
}

TEST_CASE("elliptic obstruction") {
  const TLFamily ell = build_TL_line(battery_line(LineKind::Ell));
  CHECK(kappa_obstruction(ell, ell.kappa) > 1e-3);
  const Report r = check_kappa_obstruction(ell, 1e-3);
  CHECK(r.pass);
  CHECK(r.rule == PassRule::Above);
  CHECK_THROWS_AS(baxterize_TL(ell, tri_param(kPi / 5)), PreconditionError);
  const TLFamily tri = build_TL_line(battery_line(LineKind::Tri));
  CHECK(kappa_obstruction(tri, tri.kappa) < 1e-15);
}

TEST_CASE("TL ansatz R-matrix") {
  const TLFamily f = diagram_family("A5");
  const RFamily R = baxterize_TL(f, natural_param(parse_diagram("A5")));
  const double lambda = kPi / 6;
  for (Vertex a : f.graph().vertices()) {
    CHECK(residual(R.R(0.0, a), FiberOperator::identity(f.cache->get(a, 2))) == 0.0);
    const Complex x = std::sin(0.3) / std::sin(lambda - 0.3);
    const auto expect = FiberOperator::identity(f.cache->get(a, 2)) + x * f.T.at(a);
    CHECK(residual(R.R(0.3, a), expect) < 1e-15);
  }
}

TEST_CASE("dYBE on A5 against the dense oracle") {
  const TLFamily f = diagram_family("A5");
  const RFamily R = baxterize_TL(f, natural_param(parse_diagram("A5")));
  for (Vertex a : f.graph().vertices()) {
    CHECK(dybe_residual(R, a, 0.3, 0.7) < 1e-9);
    CHECK(dense_dybe(R, a, 0.3, 0.7) < 1e-9);
    CHECK(dybe_residual(R, a, 0.25, 0.25) < 1e-12);
  }
  CHECK(check_dYBE(R, 1e-9).pass);
}

TEST_CASE("dYBE for affine rational families") {
  for (const std::string d : {"D_aff5", "A_aff6", "E7_aff"}) {
    const TLFamily f = diagram_family(d);
    const RFamily R = baxterize_TL(f, rational_param());
    for (Vertex a : f.graph().vertices()) {
      CHECK(dybe_residual(R, a, 0.2, 0.45) < 1e-9);
      CHECK(dense_dybe(R, a, 0.2, 0.45) < 1e-9);
    }
  }
}

TEST_CASE("dYBE does not depend on the eigenvector normalization") {
  const Graph g = build_diagram(DiagramFamily::D, 5);
  PFData pf = pf_eigen(g);
  const RFamily a = baxterize_TL(build_TL_graph(g, pf), tri_param(kPi / 8));
  for (auto& [v, x] : pf.eigenvector) x *= 0.031;
  const RFamily b = baxterize_TL(build_TL_graph(g, pf), tri_param(kPi / 8));
  for (Vertex v : g.vertices()) {
    CHECK(std::abs(dybe_residual(a, v, 0.3, 0.1) - dybe_residual(b, v, 0.3, 0.1)) < 1e-13);
  }
}

TEST_CASE("generalized dYBE with precomputed parameters") {
  const TLFamily f = diagram_family("A4");
  const SpectralParam p = tri_param(kPi / 5);
  const Complex z = 0.17, w = 0.41;
  // x = f(z - w'), x' = f(z), x'' = f(w) with the arguments of the dYBE.
  const Complex x = p(z - w), xp = p(z), xpp = p(w);
  for (Vertex a : f.graph().vertices()) {
    CHECK(gdybe_residual(f, a, x, xp, xpp) < 1e-12);
    CHECK(gdybe_residual(f, a, x, xp, xpp + 0.1) > 1e-3);
  }
}

TEST_CASE("line family dYBE") {
  for (LineKind k : {LineKind::Tri, LineKind::Hyp}) {
    const TLFamily f = build_TL_line(battery_line(k));
    const SpectralParam p = k == LineKind::Tri ? tri_param(kPi / 4) : hyp_param(kPi / 4);
    const Report r = check_dYBE(baxterize_TL(f, p), 1e-9);
    CHECK(r.pass);
    CHECK_FALSE(r.skipped.empty());
  }
}

TEST_CASE("Hecke Baxterization") {
  const HeckeFamily h = hecke_from_TL(diagram_family("A5"));
  const SigmaData s = sigma_from_hecke(h);
  for (const auto& [v, sigma] : s.sigma) {
    const auto id = FiberOperator::identity(sigma.space());
    const Complex q = h.qbar.at(v);
    CHECK(std::abs(s.f.at(v) - Complex(0.0, 1.0) * (q - 1.0 / q)) < 1e-15);
    CHECK(residual(sigma + inverse(sigma), s.f.at(v) * id) < 1e-12);
  }
  const RFamily R = baxterize_Hecke(h, s);
  for (Vertex a : h.graph().vertices()) {
    CHECK(residual(R.R(0.0, a), s.f.at(a) * FiberOperator::identity(h.cache->get(a, 2))) < 1e-12);
    CHECK(dybe_residual(R, a, 0.3, 0.7) < 1e-10);
  }
  SigmaData broken = s;
  broken.f.begin()->second += 0.5;
  CHECK_THROWS_AS(baxterize_Hecke(h, broken), PreconditionError);
}

TEST_CASE("BMW Baxterization") {
  const HeckeFamily h = hecke_from_TL(diagram_family("A5"));
  const BMWFamily b = bmw_from_hecke(h, 1.0 / h.qbar.begin()->second);
  const RFamily2 R = baxterize_BMW(b);
  for (Vertex a : b.graph().vertices()) {
    const Complex q = b.qbar.at(a);
    const auto id = FiberOperator::identity(b.cache->get(a, 2));
    const Complex u = 1.3, v = 2.1;
    CHECK(residual(R.R(u, v, a), b.U.at(a) + (q - 1.0 / q) / (v / u - 1.0) * id) < 1e-12);
    CHECK(residual(R.R(1.0, 1e8, a), b.U.at(a)) < 1e-6);
    CHECK(dybe2_residual(R, a, 1.0, 1.7, 2.3) < 1e-10);
  }
  CHECK_THROWS_AS(bmw_R(b, 1.5, 1.5, 1), DomainError);
  CHECK(check_dYBE_2param(R, default_triples(), 1e-10).pass);
  CHECK(default_triples().size() == 5);
}

TEST_CASE("ABF elliptic R-matrix") {
  const LineParams p = battery_line(LineKind::Ell);
  const RFamily R = abf_family(p);
  const FiberSpaceCache line(line_graph(p.lo, p.hi));
  for (Vertex k = 3; k <= 11; ++k) {
    CHECK(residual(R.R(0.0, k), FiberOperator::identity(R.cache->get(k, 2))) < 1e-15);
    const auto op = build_ABF_R(line, p.ell, 0.23, k);
    CHECK(op.block(Path({k, k - 1, k}), Path({k, k + 1, k})) ==
          op.block(Path({k, k + 1, k}), Path({k, k - 1, k})));
    CHECK(op.block(Path({k, k + 1, k + 2}), Path({k, k + 1, k + 2})) == Complex(1.0));
  }
  for (Vertex k = 4; k <= 10; ++k) CHECK(dybe_residual(R, k, 0.13, 0.31) < 1e-8);
  CHECK(check_dYBE(R, 1e-8, 5).pass);
}

TEST_CASE("ABF degenerates to the trigonometric R-matrix") {
  LineParams p = battery_line(LineKind::Ell);
  p.ell.tau = Complex(0.0, 10.0);
  const Report r = check_degeneration(p, {{0.13, 4}, {0.3, 6}, {0.45, 9}}, 1e-6);
  CHECK(r.pass);
  LineParams q = battery_line(LineKind::Ell);
  CHECK_FALSE(check_degeneration(q, {{0.3, 6}}, 1e-6).pass);
}

}  // TEST_SUITE
