#include "dynbax/baxter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dynbax/errors.hpp"

namespace dynbax {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingular = 1e-12;
constexpr double kSigmaMatch = 1e-10;

double radical_inverse(int i, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * (i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

// Distance to the nearest point of p + period * Z.
double lattice_distance(Complex z, Complex p, Complex period) {
  const Complex d = z - p;
  const double k = std::round((d / period).real());
  return std::abs(d - k * period);
}

void echo(Report& r, const FamilyBase& f) {
  r.graph = f.graph().name();
  r.family = f.name;
  for (const auto& [k, v] : f.params) r.param(k, v);
}

std::string sample_list(const std::vector<std::pair<Complex, Complex>>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ';';
    os << format_double(s[i].first.real()) << ':' << format_double(s[i].second.real());
  }
  return os.str();
}

LocalOperatorMap evaluate(const FamilyBase& f, const std::vector<Vertex>& vertices,
                          const std::function<FiberOperator(Vertex)>& fn) {
  LocalOperatorMap out;
  const auto& vs = vertices.empty() ? f.graph().vertices() : vertices;
  for (Vertex v : vs) out.emplace(v, fn(v));
  return out;
}

}  // namespace

SpectralParam tri_param(double lambda) {
  SpectralParam p;
  p.kind = ParamKind::Tri;
  p.name = "tri";
  p.lambda = lambda;
  p.scale = lambda;
  p.eval = [lambda](Complex z) { return std::sin(z) / std::sin(lambda - z); };
  p.pole_distance = [lambda](Complex z) {
    return lattice_distance(z, lambda, kPi);
  };
  return p;
}

SpectralParam hyp_param(double lambda) {
  SpectralParam p;
  p.kind = ParamKind::Hyp;
  p.name = "hyp";
  p.lambda = lambda;
  p.scale = lambda;
  p.eval = [lambda](Complex z) { return std::sinh(z) / std::sinh(lambda - z); };
  p.pole_distance = [lambda](Complex z) {
    return lattice_distance(z, lambda, Complex(0.0, kPi));
  };
  return p;
}

SpectralParam rational_param() {
  SpectralParam p;
  p.kind = ParamKind::Rational;
  p.name = "rational";
  p.eval = [](Complex z) { return z / (1.0 - z); };
  p.pole_distance = [](Complex z) { return std::abs(z - 1.0); };
  return p;
}

SpectralParam custom_param(std::string name, std::function<Complex(Complex)> f,
                           std::function<double(Complex)> pole_distance) {
  SpectralParam p;
  p.kind = ParamKind::Custom;
  p.name = std::move(name);
  p.eval = std::move(f);
  p.pole_distance = std::move(pole_distance);
  return p;
}

SpectralParam param_by_name(const std::string& name, double lambda) {
  if (name == "tri") return tri_param(lambda);
  if (name == "hyp") return hyp_param(lambda);
  if (name == "rational") return rational_param();
  throw InputError("unknown parameterization '" + name +
                   "' (expected tri|hyp|rational)");
}

std::vector<std::pair<double, double>> sample_grid(int n) {
  if (n < 1) throw InputError("sample count must be positive");
  std::vector<std::pair<double, double>> out;
  for (int i = 1; i <= n; ++i) {
    out.emplace_back(0.05 + 0.4 * radical_inverse(i, 2),
                     0.05 + 0.4 * radical_inverse(i, 3));
  }
  return out;
}

std::vector<std::pair<Complex, Complex>> scaled_samples(const SpectralParam& f,
                                                        int n) {
  std::vector<std::pair<Complex, Complex>> out;
  for (auto [s, t] : sample_grid(n)) {
    out.emplace_back(f.scale * s, f.scale * t);
  }
  return out;
}

double functional_residual(const SpectralParam& f, Complex kappa, Complex z,
                           Complex zp) {
  const Complex x = f(z);
  const Complex xp = f(zp);
  const Complex xpp = f(zp - z);
  return std::abs(xpp * (1.0 + kappa * x + x * xp) - (xp - x));
}

double kappa_obstruction(const FamilyBase& fam, const ScalarMap& kappa) {
  double worst = 0.0;
  for (auto [u, v] : fam.graph().edges()) {
    if (!fam.complete.count(u) || !fam.complete.count(v)) continue;
    worst = std::max(worst, std::abs(kappa.at(u) - kappa.at(v)));
  }
  return worst;
}

Report check_functional_relation(
    const SpectralParam& f, const FamilyBase& fam, const ScalarMap& kappa,
    const std::vector<std::pair<Complex, Complex>>& samples, double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "functional_relation";
  echo(r, fam);
  r.param("param", f.name);
  if (f.kind == ParamKind::Tri || f.kind == ParamKind::Hyp) r.param("lambda", f.lambda);
  r.param("samples", sample_list(samples));
  r.tol = tol;
  std::vector<std::pair<Complex, Complex>> usable;
  for (auto [z, zp] : samples) {
    if (f.pole_distance && (f.pole_distance(z) < kPoleGuard ||
                            f.pole_distance(zp) < kPoleGuard ||
                            f.pole_distance(zp - z) < kPoleGuard)) {
      r.warnings.push_back("sample (" + format_complex(z) + ", " +
                           format_complex(zp) + ") skipped: too close to a pole");
      continue;
    }
    usable.emplace_back(z, zp);
  }
  for (Vertex a : fam.graph().vertices()) {
    if (!fam.complete.count(a)) {
      r.skip(a, "incomplete vertex");
      continue;
    }
    double own = 0.0;
    double shifted = 0.0;
    for (auto [z, zp] : usable) {
      own = std::max(own, functional_residual(f, kappa.at(a), z, zp));
      for (Vertex b : fam.graph().neighbors(a)) {
        auto it = kappa.find(b);
        if (it == kappa.end()) continue;
        shifted = std::max(shifted, functional_residual(f, it->second, z, zp));
      }
    }
    r.add(a, "kappa(a)", own);
    r.add(a, "kappa(ah1)", shifted);
  }
  ScalarMap kc;
  for (Vertex v : fam.complete) kc[v] = kappa.at(v);
  if (!is_constant(kc)) {
    const double obs = kappa_obstruction(fam, kappa);
    r.param("obstruction", obs);
    r.warnings.push_back("kappa is not constant: max |kappa(a) - kappa(b)| = " +
                         format_double(obs));
  }
  r.finalize();
  return r;
}

Report check_kappa_obstruction(const TLFamily& f, double threshold) {
  Report r;
  ScopedTimer timer(r);
  r.check = "kappa_obstruction";
  echo(r, f);
  r.tol = threshold;
  r.rule = PassRule::Above;
  for (auto [u, v] : f.graph().edges()) {
    if (!f.complete.count(u) || !f.complete.count(v)) continue;
    r.add(u, "|kappa(" + std::to_string(u) + ")-kappa(" + std::to_string(v) + ")|",
          std::abs(f.kappa.at(u) - f.kappa.at(v)));
  }
  r.finalize();
  return r;
}

LocalOperatorMap RFamily::at(Complex z, const std::vector<Vertex>& vertices) const {
  return evaluate(*this, vertices, [&](Vertex v) { return R(z, v); });
}

LocalOperatorMap RFamily2::at(Complex u, Complex v,
                              const std::vector<Vertex>& vertices) const {
  return evaluate(*this, vertices, [&](Vertex a) { return R(u, v, a); });
}

RFamily baxterize_TL(const TLFamily& family, const SpectralParam& f, double tol) {
  const Report rel =
      check_functional_relation(f, family, family.kappa, scaled_samples(f), tol);
  if (!rel.pass) {
    std::string msg = "functional relation fails for " + family.name + " with " +
                      f.name + " (max residual " + format_double(rel.max_residual) + ")";
    for (const auto& w : rel.warnings) msg += "; " + w;
    throw PreconditionError(msg);
  }
  RFamily out;
  static_cast<FamilyBase&>(out) = family;
  out.kind = "TL-ansatz";
  out.name = family.name + "+" + f.name;
  out.params.emplace_back("param", f.name);
  out.scale = f.scale;
  auto T = std::make_shared<const LocalOperatorMap>(family.T);
  out.R = [T, f](Complex z, Vertex a) {
    const auto& t = T->at(a);
    return FiberOperator::identity(t.space()) + f(z) * t;
  };
  return out;
}

SigmaData sigma_from_hecke(const HeckeFamily& h) {
  SigmaData s;
  const Complex i(0.0, 1.0);
  for (const auto& [v, S] : h.S) {
    s.sigma.emplace(v, i * S);
    const Complex q = h.qbar.at(v);
    s.f[v] = i * (q - 1.0 / q);
  }
  return s;
}

RFamily baxterize_Hecke(const FamilyBase& base, const SigmaData& s) {
  auto inv = std::make_shared<LocalOperatorMap>();
  ScalarMap fc;
  for (const auto& [v, sig] : s.sigma) {
    FiberOperator si = inverse(sig);
    if (base.complete.count(v)) {
      const Complex fv = s.f.at(v);
      const double res =
          residual(sig + si, fv * FiberOperator::identity(sig.space()));
      if (res > kSigmaMatch) {
        throw PreconditionError("sigma + sigma^-1 != f id at vertex " +
                                std::to_string(v) + " (residual " +
                                format_double(res) + ")");
      }
      fc[v] = fv;
    }
    inv->emplace(v, std::move(si));
  }
  if (!is_constant(fc)) {
    throw PreconditionError("f must be constant along arrows");
  }
  RFamily out;
  static_cast<FamilyBase&>(out) = base;
  out.kind = "Hecke";
  out.name = "baxter(" + base.name + ")";
  auto sig = std::make_shared<const LocalOperatorMap>(s.sigma);
  std::shared_ptr<const LocalOperatorMap> sinv = inv;
  out.R = [sig, sinv](Complex z, Vertex a) {
    return std::exp(z) * sig->at(a) + std::exp(-z) * sinv->at(a);
  };
  return out;
}

FiberOperator bmw_R(const BMWFamily& family, Complex u, Complex v, Vertex a) {
  if (std::abs(u) < kSingular) throw DomainError("u must be nonzero");
  const Complex ratio = v / u;
  const Complex q = family.qbar.at(a);
  const Complex c = q - 1.0 / q;
  const Complex d1 = ratio - 1.0;
  const Complex d2 = 1.0 + q / family.nubar.at(a) * ratio;
  if (std::abs(d1) < kSingular) throw DomainError("v/u - 1 vanishes");
  if (std::abs(d2) < kSingular) throw DomainError("1 + nubar^-1 qbar v/u vanishes");
  const auto& U = family.U.at(a);
  return U + (c / d1) * FiberOperator::identity(U.space()) + (c / d2) * family.K.at(a);
}

RFamily2 baxterize_BMW(const BMWFamily& family) {
  for (auto [x, y] : family.graph().edges()) {
    if (std::abs(family.qbar.at(x) - family.qbar.at(y)) > kSingular ||
        std::abs(family.nubar.at(x) - family.nubar.at(y)) > kSingular) {
      throw PreconditionError("qbar and nubar must be constant along arrows");
    }
  }
  RFamily2 out;
  static_cast<FamilyBase&>(out) = family;
  out.name = "baxter(" + family.name + ")";
  auto fam = std::make_shared<const BMWFamily>(family);
  out.R = [fam](Complex u, Complex v, Vertex a) { return bmw_R(*fam, u, v, a); };
  return out;
}

FiberOperator build_ABF_R(const FiberSpaceCache& line, const EllipticParams& params,
                          Complex z, Vertex k) {
  const double a = k + params.shift_b;
  auto br = [&](Complex x) { return bracket_ell(x, params); };
  const Complex ba = br(a);
  const Complex b1z = br(1.0 - z);
  if (std::abs(ba) < kSingular) throw DomainError("[a] vanishes at a = " + format_double(a));
  if (std::abs(b1z) < kSingular) throw DomainError("[1-z] vanishes");
  const Complex b1 = br(1.0);
  const Complex bz = br(z);
  const Graph& g = line.graph();
  const bool up = g.has_vertex(k + 1);
  const bool down = g.has_vertex(k - 1);
  std::vector<Block> blocks;
  if (up && g.has_vertex(k + 2)) {
    blocks.push_back({Path({k, k + 1, k + 2}), Path({k, k + 1, k + 2}), 1.0});
  }
  if (down && g.has_vertex(k - 2)) {
    blocks.push_back({Path({k, k - 1, k - 2}), Path({k, k - 1, k - 2}), 1.0});
  }
  const Path via_up({k, k + 1, k});
  const Path via_down({k, k - 1, k});
  const Complex den = ba * b1z;
  if (up) blocks.push_back({via_up, via_up, br(a + z) * b1 / den});
  if (down) blocks.push_back({via_down, via_down, br(a - z) * b1 / den});
  if (up && down) {
    const Complex cross = branch_sqrt(br(a - 1.0) * br(a + 1.0)) * bz / den;
    blocks.push_back({via_up, via_down, cross});
    blocks.push_back({via_down, via_up, cross});
  }
  return FiberOperator::from_blocks(line.get(k, 2), blocks);
}

RFamily abf_family(const LineParams& p) {
  p.ell.validate();
  if (p.hi - p.lo + 1 < 5) throw InputError("line window needs at least 5 vertices");
  RFamily out;
  auto cache = std::make_shared<const FiberSpaceCache>(line_graph(p.lo, p.hi));
  out.cache = cache;
  for (Vertex k = p.lo + 1; k < p.hi; ++k) out.complete.insert(k);
  out.name = "abf";
  out.kind = "ABF-elliptic";
  out.params = {{"L", std::to_string(p.ell.L)},
                {"tau", format_complex(p.ell.tau)},
                {"shift_b", format_double(p.ell.shift_b)},
                {"window", std::to_string(p.lo) + ":" + std::to_string(p.hi)}};
  const EllipticParams ell = p.ell;
  out.R = [cache, ell](Complex z, Vertex k) { return build_ABF_R(*cache, ell, z, k); };
  return out;
}

double dybe_residual(const RFamily& R, Vertex a, Complex z, Complex w) {
  const auto& cache = *R.cache;
  const auto vs = R.graph().ball(a, 1);
  const auto Rz = R.at(z, vs);
  const auto Rw = R.at(w, vs);
  const auto Rd = R.at(z - w, vs);
  auto E = [&](const LocalOperatorMap& m, int pos) {
    return embed_with_shift(cache, m, a, pos, 3);
  };
  return residual(E(Rd, 2) * E(Rz, 1) * E(Rw, 2), E(Rw, 1) * E(Rz, 2) * E(Rd, 1));
}

double gdybe_residual(const TLFamily& f, Vertex a, Complex x, Complex xp,
                      Complex xpp) {
  const auto& cache = *f.cache;
  auto Rx = [&](Complex s) {
    LocalOperatorMap m;
    for (Vertex v : f.graph().ball(a, 1)) {
      const auto& t = f.T.at(v);
      m.emplace(v, FiberOperator::identity(t.space()) + s * t);
    }
    return m;
  };
  const auto R0 = Rx(x);
  const auto R1 = Rx(xp);
  const auto R2 = Rx(xpp);
  auto E = [&](const LocalOperatorMap& m, int pos) {
    return embed_with_shift(cache, m, a, pos, 3);
  };
  return residual(E(R0, 2) * E(R1, 1) * E(R2, 2), E(R2, 1) * E(R1, 2) * E(R0, 1));
}

double dybe2_residual(const RFamily2& R, Vertex a, Complex u1, Complex u2,
                      Complex u3) {
  const auto& cache = *R.cache;
  const auto vs = R.graph().ball(a, 1);
  auto E = [&](Complex u, Complex v, int pos) {
    return embed_with_shift(cache, R.at(u, v, vs), a, pos, 3);
  };
  return residual(E(u2, u3, 1) * E(u1, u3, 2) * E(u1, u2, 1),
                  E(u1, u2, 2) * E(u1, u3, 1) * E(u2, u3, 2));
}

Report check_dYBE(const RFamily& R,
                  const std::vector<std::pair<Complex, Complex>>& samples,
                  double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "dYBE";
  echo(r, R);
  r.param("kind", R.kind);
  r.param("samples", sample_list(samples));
  r.tol = tol;
  for (Vertex a : R.graph().vertices()) {
    if (!R.admissible(a, 3)) {
      r.skip(a, "order-3 fiber leaves the complete region");
      continue;
    }
    double worst = 0.0;
    for (auto [z, w] : samples) worst = std::max(worst, dybe_residual(R, a, z, w));
    r.add(a, "dYBE", worst);
  }
  r.finalize();
  return r;
}

Report check_dYBE(const RFamily& R, double tol, int n_samples) {
  std::vector<std::pair<Complex, Complex>> s;
  for (auto [x, y] : sample_grid(n_samples)) s.emplace_back(R.scale * x, R.scale * y);
  return check_dYBE(R, s, tol);
}

std::vector<std::array<double, 3>> default_triples() {
  return {{1.0, 1.7, 2.3}, {0.8, 1.3, 2.9}, {1.2, 0.7, 1.9},
          {0.6, 1.1, 1.5}, {1.5, 2.2, 0.9}};
}

Report check_dYBE_2param(const RFamily2& R,
                         const std::vector<std::array<double, 3>>& triples,
                         double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "dYBE_2param";
  echo(r, R);
  std::ostringstream os;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (i) os << ';';
    os << format_double(triples[i][0]) << ':' << format_double(triples[i][1]) << ':'
       << format_double(triples[i][2]);
  }
  r.param("triples", os.str());
  r.tol = tol;
  for (Vertex a : R.graph().vertices()) {
    if (!R.admissible(a, 3)) {
      r.skip(a, "order-3 fiber leaves the complete region");
      continue;
    }
    double worst = 0.0;
    for (const auto& t : triples) {
      worst = std::max(worst, dybe2_residual(R, a, t[0], t[1], t[2]));
    }
    r.add(a, "dYBE_2param", worst);
  }
  r.finalize();
  return r;
}

Report check_degeneration(const LineParams& p,
                          const std::vector<std::pair<double, Vertex>>& points,
                          double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "degeneration";
  LineParams tri = p;
  tri.kind = LineKind::Tri;
  const TLFamily t = build_TL_line(tri);
  const RFamily ell = abf_family(p);
  r.graph = t.graph().name();
  r.family = "abf-vs-tri";
  for (const auto& [k, v] : ell.params) r.param(k, v);
  r.tol = tol;
  for (auto [z, k] : points) {
    if (!t.complete.count(k)) {
      r.skip(k, "incomplete vertex");
      continue;
    }
    const auto& T = t.T.at(k);
    const Complex x = bracket_tri(z, p.ell.L) / bracket_tri(1.0 - z, p.ell.L);
    const auto Rtri = FiberOperator::identity(T.space()) + x * T;
    const auto Rell = ell.R(z, k);
    r.add(k, "z=" + format_double(z), residual(Rell, Rtri));
  }
  r.finalize();
  return r;
}

}  // namespace dynbax
