#include "dynbax/operators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <tuple>

#include "dynbax/errors.hpp"

namespace dynbax {

namespace {

constexpr double kSingular = 1e-12;
constexpr double kKappaMatch = 1e-10;

FiberOperator scalar_times(const FiberSpaceCache& cache, Vertex base, int order,
                           int leg, const ScalarMap& m, const FiberOperator& f) {
  return shifted_scalar(cache, base, order, leg,
                        [&](Vertex v) { return m.at(v); }) *
         f;
}

std::string indexed(const std::string& name, int i) {
  return name + "[i=" + std::to_string(i) + "]";
}

std::string indexed(const std::string& name, int i, int j) {
  return name + "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
}

void echo(Report& r, const FamilyBase& f) {
  r.graph = f.graph().name();
  r.family = f.name;
  for (const auto& [k, v] : f.params) r.param(k, v);
}

std::set<Vertex> all_vertices(const Graph& g) {
  return {g.vertices().begin(), g.vertices().end()};
}

// Embeddings of an order-2 family on positions 1..N-1 of the fiber at base.
std::vector<FiberOperator> embed_all(const FiberSpaceCache& cache,
                                     const LocalOperatorMap& fam, Vertex base,
                                     int N) {
  std::vector<FiberOperator> out;
  for (int i = 1; i <= N - 1; ++i) {
    out.push_back(embed_with_shift(cache, fam, base, i, N));
  }
  return out;
}

void require_fiber_size(const Graph& g, Vertex base, int N) {
  const std::size_t dim = fiber_dimension(g, base, N);
  if (dim > kMaxFiberPaths) {
    throw PreconditionError("order-" + std::to_string(N) + " fiber at " +
                            std::to_string(base) + " has " +
                            std::to_string(dim) + " paths (cap " +
                            std::to_string(kMaxFiberPaths) + ")");
  }
}

}  // namespace

std::size_t fiber_dimension(const Graph& g, Vertex base, int k) {
  if (!g.has_vertex(base)) {
    throw InputError("unknown vertex " + std::to_string(base));
  }
  std::map<Vertex, std::size_t> count{{base, 1}};
  for (int step = 0; step < k; ++step) {
    std::map<Vertex, std::size_t> next;
    for (const auto& [v, c] : count) {
      for (Vertex w : g.neighbors(v)) next[w] += c;
    }
    count = std::move(next);
  }
  std::size_t total = 0;
  for (const auto& [v, c] : count) total += c;
  return total;
}

bool FamilyBase::admissible(Vertex base, int order) const {
  for (Vertex v : graph().ball(base, std::max(0, order - 2))) {
    if (!complete.count(v)) return false;
  }
  return true;
}

bool is_constant(const ScalarMap& m, double tol) {
  if (m.empty()) return true;
  const Complex first = m.begin()->second;
  return std::all_of(m.begin(), m.end(), [&](const auto& kv) {
    return std::abs(kv.second - first) <= tol * std::max(1.0, std::abs(first));
  });
}

TLFamily tl_from_weights(const Graph& g, const ScalarMap& weight,
                         const ScalarMap& kappa, std::set<Vertex> complete,
                         std::string name) {
  TLFamily f;
  f.cache = std::make_shared<const FiberSpaceCache>(g);
  f.complete = std::move(complete);
  f.name = std::move(name);
  f.kappa = kappa;
  f.weight = weight;
  for (Vertex d : g.vertices()) {
    const Complex sd = weight.at(d);
    if (std::abs(sd) < kSingular) {
      throw SingularityError("face weight vanishes at vertex " +
                             std::to_string(d));
    }
    std::vector<Block> blocks;
    for (Vertex a : g.neighbors(d)) {
      for (Vertex c : g.neighbors(d)) {
        const Complex sa = weight.at(a);
        const Complex sc = weight.at(c);
        const Complex value = a == c ? sa / sd : branch_sqrt(sa * sc) / sd;
        blocks.push_back({Path({d, a, d}), Path({d, c, d}), value});
      }
    }
    f.T.emplace(d, FiberOperator::from_blocks(f.cache->get(d, 2), blocks));
  }
  return f;
}

TLFamily build_TL_graph(const Graph& g, const PFData& pf) {
  ScalarMap weight;
  ScalarMap kappa;
  for (Vertex v : g.vertices()) {
    auto it = pf.eigenvector.find(v);
    if (it == pf.eigenvector.end()) {
      throw InputError("PF data does not belong to the graph (vertex " +
                       std::to_string(v) + ")");
    }
    weight[v] = it->second;
    kappa[v] = pf.eigenvalue;
  }
  auto f = tl_from_weights(g, weight, kappa, all_vertices(g), "graph");
  f.params.emplace_back("phi", format_double(pf.eigenvalue));
  return f;
}

std::string line_kind_name(LineKind k) {
  switch (k) {
    case LineKind::Tri: return "tri";
    case LineKind::Hyp: return "hyp";
    case LineKind::Ell: return "ell";
  }
  return "?";
}

LineKind parse_line_kind(const std::string& s) {
  if (s == "tri") return LineKind::Tri;
  if (s == "hyp") return LineKind::Hyp;
  if (s == "ell") return LineKind::Ell;
  throw InputError("unknown line family '" + s + "' (expected tri|hyp|ell)");
}

Complex line_bracket(const LineParams& p, Complex x) {
  switch (p.kind) {
    case LineKind::Tri: return bracket_tri(x, p.ell.L);
    case LineKind::Hyp: return bracket_hyp(x, p.ell.L);
    case LineKind::Ell: return bracket_ell(x, p.ell);
  }
  return 0.0;
}

Graph line_graph(int lo, int hi) {
  if (hi <= lo) throw InputError("window must have lo < hi");
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int k = lo; k <= hi; ++k) {
    v.push_back(k);
    if (k > lo) e.emplace_back(k - 1, k);
  }
  Graph g(v, e);
  g.set_name("line[" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  return g;
}

TLFamily build_TL_line(const LineParams& p) {
  if (p.hi - p.lo + 1 < 5) {
    throw InputError("line window needs at least 5 vertices");
  }
  if (p.kind == LineKind::Ell) p.ell.validate();
  if (p.ell.L < 2) throw InputError("L must be at least 2");
  const Graph g = line_graph(p.lo, p.hi);
  const double lambda = std::numbers::pi / (p.ell.L + 1);
  ScalarMap weight;
  ScalarMap kappa;
  std::set<Vertex> complete;
  auto bracket = [&](double x) {
    const Complex b = line_bracket(p, x);
    if (std::abs(b) < kSingular) {
      throw SingularityError("bracket vanishes at " + format_double(x) +
                             "; choose a generic shift b");
    }
    return b;
  };
  for (Vertex k = p.lo; k <= p.hi; ++k) {
    const double a = p.object(k);
    weight[k] = bracket(a);
    switch (p.kind) {
      case LineKind::Tri: kappa[k] = 2.0 * std::cos(lambda); break;
      case LineKind::Hyp: kappa[k] = 2.0 * std::cosh(lambda); break;
      case LineKind::Ell:
        kappa[k] = (bracket(a + 1) + bracket(a - 1)) / weight[k];
        break;
    }
    if (k > p.lo && k < p.hi) complete.insert(k);
  }
  auto f = tl_from_weights(g, weight, kappa, complete, line_kind_name(p.kind));
  f.params.emplace_back("L", std::to_string(p.ell.L));
  f.params.emplace_back("shift_b", format_double(p.ell.shift_b));
  f.params.emplace_back("window", std::to_string(p.lo) + ":" + std::to_string(p.hi));
  if (p.kind == LineKind::Ell) f.params.emplace_back("tau", format_complex(p.ell.tau));
  return f;
}

Complex qbar_from_kappa(Complex kappa) {
  Complex q = (kappa + branch_sqrt(kappa * kappa - 4.0)) / 2.0;
  if (q.imag() < 0.0) q = 1.0 / q;
  return q;
}

HeckeFamily hecke_from_TL(const TLFamily& tl, const ScalarMap& qbar) {
  HeckeFamily h;
  h.cache = tl.cache;
  h.complete = tl.complete;
  h.name = "hecke(" + tl.name + ")";
  h.params = tl.params;
  for (const auto& [v, T] : tl.T) {
    auto it = qbar.find(v);
    if (it == qbar.end()) {
      throw InputError("qbar missing at vertex " + std::to_string(v));
    }
    const Complex q = it->second;
    const Complex sum = q + 1.0 / q;
    if (std::abs(sum) < kSingular) {
      throw InputError("qbar + qbar^-1 vanishes at vertex " + std::to_string(v));
    }
    if (std::abs(sum - tl.kappa.at(v)) > kKappaMatch) {
      throw InputError("qbar + qbar^-1 does not match kappa at vertex " +
                       std::to_string(v));
    }
    h.qbar[v] = q;
    h.S.emplace(v, q * FiberOperator::identity(T.space()) - T);
  }
  return h;
}

HeckeFamily hecke_from_TL(const TLFamily& tl) {
  ScalarMap qbar;
  for (const auto& [v, k] : tl.kappa) qbar[v] = qbar_from_kappa(k);
  return hecke_from_TL(tl, qbar);
}

TLFamily tl_from_hecke(const HeckeFamily& h) {
  TLFamily t;
  t.cache = h.cache;
  t.complete = h.complete;
  t.name = "tl(" + h.name + ")";
  t.params = h.params;
  for (const auto& [v, S] : h.S) {
    const Complex q = h.qbar.at(v);
    t.T.emplace(v, q * FiberOperator::identity(S.space()) - S);
    t.kappa[v] = q + 1.0 / q;
  }
  return t;
}

BMWFamily make_BMW(std::shared_ptr<const FiberSpaceCache> cache,
                   LocalOperatorMap U, ScalarMap qbar, ScalarMap nubar,
                   std::set<Vertex> complete, std::string name) {
  BMWFamily b;
  b.cache = std::move(cache);
  b.complete = std::move(complete);
  b.name = std::move(name);
  for (const auto& [v, u] : U) {
    const Complex q = qbar.at(v);
    const Complex d = q - 1.0 / q;
    if (std::abs(d) < kSingular) {
      throw DomainError("qbar = qbar^-1 at vertex " + std::to_string(v));
    }
    if (!nubar.count(v)) {
      throw InputError("nubar missing at vertex " + std::to_string(v));
    }
    FiberOperator inv = inverse(u);
    b.K.emplace(v, FiberOperator::identity(u.space()) - (1.0 / d) * (u - inv));
    b.U_inv.emplace(v, std::move(inv));
  }
  b.U = std::move(U);
  b.qbar = std::move(qbar);
  b.nubar = std::move(nubar);
  return b;
}

BMWFamily bmw_from_hecke(const HeckeFamily& h, Complex nubar) {
  ScalarMap nu;
  for (const auto& [v, q] : h.qbar) nu[v] = nubar;
  auto b = make_BMW(h.cache, h.S, h.qbar, nu, h.complete, "bmw(" + h.name + ")");
  b.params = h.params;
  b.params.emplace_back("nubar", format_complex(nubar));
  return b;
}

Report check_dTL(const TLFamily& f, double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "dTL";
  echo(r, f);
  r.tol = tol;
  const auto& cache = *f.cache;
  for (Vertex a : f.graph().vertices()) {
    if (!f.admissible(a, 2)) {
      r.skip(a, "incomplete vertex");
      continue;
    }
    const auto& T = f.T.at(a);
    r.add(a, "T^2=kappa*T", residual(T * T, f.kappa.at(a) * T));
    if (!f.admissible(a, 3)) {
      r.skip(a, "order-3 fiber leaves the complete region");
      continue;
    }
    const auto T12 = embed_with_shift(cache, f.T, a, 1, 3);
    const auto T23 = embed_with_shift(cache, f.T, a, 2, 3);
    r.add(a, "T12*T23*T12=T12", residual(T12 * T23 * T12, T12));
    r.add(a, "T23*T12*T23=T23", residual(T23 * T12 * T23, T23));
  }
  r.finalize();
  return r;
}

Report check_dHecke(const HeckeFamily& f, double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "dHecke";
  echo(r, f);
  r.tol = tol;
  const auto& cache = *f.cache;
  for (Vertex a : f.graph().vertices()) {
    if (!f.admissible(a, 2)) {
      r.skip(a, "incomplete vertex");
      continue;
    }
    const auto& S = f.S.at(a);
    const Complex q = f.qbar.at(a);
    const auto id = FiberOperator::identity(S.space());
    r.add(a, "(S-q)(S+1/q)=0",
          max_abs((S - q * id) * (S + (1.0 / q) * id)));
    if (!f.admissible(a, 3)) {
      r.skip(a, "order-3 fiber leaves the complete region");
      continue;
    }
    const auto S12 = embed_with_shift(cache, f.S, a, 1, 3);
    const auto S23 = embed_with_shift(cache, f.S, a, 2, 3);
    r.add(a, "S12*S23*S12=S23*S12*S23",
          residual(S12 * S23 * S12, S23 * S12 * S23));
  }
  r.finalize();
  return r;
}

Report check_dBMW(const BMWFamily& f, double tol) {
  Report r;
  ScopedTimer timer(r);
  r.check = "dBMW";
  echo(r, f);
  r.tol = tol;
  const auto& cache = *f.cache;
  auto nu_pow = [&](int e) {
    ScalarMap m;
    for (const auto& [v, n] : f.nubar) m[v] = std::pow(n, e);
    return m;
  };
  const ScalarMap nu_m = nu_pow(-1);
  const ScalarMap nu_p = nu_pow(1);
  for (Vertex a : f.graph().vertices()) {
    if (!f.admissible(a, 2)) {
      r.skip(a, "incomplete vertex");
      continue;
    }
    const auto& U = f.U.at(a);
    const auto& K = f.K.at(a);
    const Complex nu = f.nubar.at(a);
    r.add(a, "K*U=nu*K", residual(K * U, nu * K));
    r.add(a, "U*K=nu*K", residual(U * K, nu * K));
    if (!f.admissible(a, 3)) {
      r.skip(a, "order-3 fiber leaves the complete region");
      continue;
    }
    const auto U12 = embed_with_shift(cache, f.U, a, 1, 3);
    const auto U23 = embed_with_shift(cache, f.U, a, 2, 3);
    const auto V12 = embed_with_shift(cache, f.U_inv, a, 1, 3);
    const auto V23 = embed_with_shift(cache, f.U_inv, a, 2, 3);
    const auto K12 = embed_with_shift(cache, f.K, a, 1, 3);
    const auto K23 = embed_with_shift(cache, f.K, a, 2, 3);
    r.add(a, "U12*U23*U12=U23*U12*U23",
          residual(U12 * U23 * U12, U23 * U12 * U23));
    // nu^{-eps}(ah^1) is the shifted scalar on leg 1; nu^{-eps}(a) is leg 0.
    r.add(a, "K23*U12*K23=nu(ah1)^-1*K23",
          residual(K23 * U12 * K23, scalar_times(cache, a, 3, 1, nu_m, K23)));
    r.add(a, "K23*U12^-1*K23=nu(ah1)*K23",
          residual(K23 * V12 * K23, scalar_times(cache, a, 3, 1, nu_p, K23)));
    r.add(a, "K12*U23*K12=nu(a)^-1*K12",
          residual(K12 * U23 * K12, scalar_times(cache, a, 3, 0, nu_m, K12)));
    r.add(a, "K12*U23^-1*K12=nu(a)*K12",
          residual(K12 * V23 * K12, scalar_times(cache, a, 3, 0, nu_p, K12)));
  }
  r.finalize();
  return r;
}

Report check_global(const TLFamily& f, int N, double tol) {
  if (N < 3) throw InputError("global checks need N >= 3");
  Report r;
  ScopedTimer timer(r);
  r.check = "global_TL";
  echo(r, f);
  r.param("N", N);
  r.tol = tol;
  const auto& cache = *f.cache;
  for (Vertex a : f.graph().vertices()) {
    if (!f.admissible(a, N)) {
      r.skip(a, "order-" + std::to_string(N) + " fiber leaves the complete region");
      continue;
    }
    require_fiber_size(f.graph(), a, N);
    const auto T = embed_all(cache, f.T, a, N);
    for (int i = 1; i <= N - 1; ++i) {
      const auto& Ti = T[static_cast<std::size_t>(i - 1)];
      r.add(a, indexed("Ti^2=kappa_i*Ti", i),
            residual(Ti * Ti, scalar_times(cache, a, N, i - 1, f.kappa, Ti)));
      if (i <= N - 2) {
        const auto& Tn = T[static_cast<std::size_t>(i)];
        r.add(a, indexed("Ti*Ti+1*Ti=Ti", i), residual(Ti * Tn * Ti, Ti));
        r.add(a, indexed("Ti+1*Ti*Ti+1=Ti+1", i), residual(Tn * Ti * Tn, Tn));
      }
      for (int j = i + 2; j <= N - 1; ++j) {
        r.add(a, indexed("[Ti,Tj]=0", i, j),
              max_abs(commutator(Ti, T[static_cast<std::size_t>(j - 1)])));
      }
    }
  }
  r.finalize();
  return r;
}

Report check_global_hecke(const HeckeFamily& f, int N, double tol) {
  if (N < 3) throw InputError("global checks need N >= 3");
  Report r;
  ScopedTimer timer(r);
  r.check = "global_Hecke";
  echo(r, f);
  r.param("N", N);
  r.tol = tol;
  const auto& cache = *f.cache;
  ScalarMap qinv;
  for (const auto& [v, q] : f.qbar) qinv[v] = 1.0 / q;
  for (Vertex a : f.graph().vertices()) {
    if (!f.admissible(a, N)) {
      r.skip(a, "order-" + std::to_string(N) + " fiber leaves the complete region");
      continue;
    }
    require_fiber_size(f.graph(), a, N);
    const auto S = embed_all(cache, f.S, a, N);
    for (int i = 1; i <= N - 1; ++i) {
      const auto& Si = S[static_cast<std::size_t>(i - 1)];
      auto q = [&](const ScalarMap& m) {
        return FiberOperator::diagonal(Si.space(), [&](const Path& p) {
          return m.at(p.at(i - 1));
        });
      };
      const auto qi = q(f.qbar);
      r.add(a, indexed("[Si,q_i]=0", i), max_abs(commutator(Si, qi)));
      r.add(a, indexed("(Si-q_i)(Si+1/q_i)=0", i),
            max_abs((Si - qi) * (Si + q(qinv))));
      if (i <= N - 2) {
        const auto& Sn = S[static_cast<std::size_t>(i)];
        r.add(a, indexed("Si*Si+1*Si=Si+1*Si*Si+1", i),
              residual(Si * Sn * Si, Sn * Si * Sn));
      }
      for (int j = i + 2; j <= N - 1; ++j) {
        r.add(a, indexed("[Si,Sj]=0", i, j),
              max_abs(commutator(Si, S[static_cast<std::size_t>(j - 1)])));
      }
    }
  }
  r.finalize();
  return r;
}

Report murphy_check(const HeckeFamily& f, int N, double tol) {
  if (N < 3) throw InputError("Murphy checks need N >= 3");
  if (!is_constant(f.qbar)) {
    throw PreconditionError("Murphy relations assume a constant qbar");
  }
  Report r;
  ScopedTimer timer(r);
  r.check = "murphy";
  echo(r, f);
  r.param("N", N);
  r.tol = tol;
  const auto& cache = *f.cache;
  for (Vertex a : f.graph().vertices()) {
    if (!f.admissible(a, N)) {
      r.skip(a, "order-" + std::to_string(N) + " fiber leaves the complete region");
      continue;
    }
    require_fiber_size(f.graph(), a, N);
    const auto S = embed_all(cache, f.S, a, N);
    auto Sat = [&](int i) -> const FiberOperator& {
      return S[static_cast<std::size_t>(i - 1)];
    };
    std::vector<FiberOperator> J{Sat(1) * Sat(1)};
    for (int i = 2; i <= N - 1; ++i) {
      J.push_back(Sat(i) * J.back() * Sat(i));
    }
    auto Jat = [&](int i) -> const FiberOperator& {
      return J[static_cast<std::size_t>(i - 1)];
    };
    for (int i = 1; i <= N - 1; ++i) {
      for (int j = i + 1; j <= N - 1; ++j) {
        r.add(a, indexed("[Ji,Jj]=0", i, j), max_abs(commutator(Jat(i), Jat(j))));
      }
    }
    for (int j = 1; j <= N - 1; ++j) {
      r.add(a, indexed("[S1,Jj]=0", 1, j), max_abs(commutator(Sat(1), Jat(j))));
    }
    for (int i = 2; i <= N - 1; ++i) {
      for (int j = i + 1; j <= N - 1; ++j) {
        r.add(a, indexed("[Si,Jj]=0", i, j), max_abs(commutator(Sat(i), Jat(j))));
      }
      r.add(a, indexed("[Si,Ji-1*Ji]=0", i),
            max_abs(commutator(Sat(i), Jat(i - 1) * Jat(i))));
      r.add(a, indexed("[Si,Ji+Ji-1]=0", i),
            max_abs(commutator(Sat(i), Jat(i) + Jat(i - 1))));
    }
  }
  r.finalize();
  return r;
}

Report check_diagram_algebra(const TLFamily& f, int N, double tol) {
  if (N < 3) throw InputError("diagram algebra checks need N >= 3");
  ScalarMap kc;
  for (Vertex v : f.complete) kc[v] = f.kappa.at(v);
  if (!is_constant(kc)) {
    throw PreconditionError("diagram algebra needs a constant kappa");
  }
  Report r;
  ScopedTimer timer(r);
  r.check = "diagram_algebra";
  echo(r, f);
  r.param("N", N);
  r.tol = tol;
  const Graph& g = f.graph();
  const auto& cache = *f.cache;
  const Complex phi = kc.empty() ? Complex(0.0) : kc.begin()->second;

  std::map<std::pair<int, Vertex>, FiberOperator> embedded;
  // e_i(a)[b,c]: T_i block on an order-N path with p_{i-1} = p_{i+1} = a,
  // in-path through p_i = c and out-path through p_i = b. Unconstrained
  // positions alternate between a and its first neighbor.
  auto e = [&](int i, Vertex a, Vertex b, Vertex c) {
    const Vertex n = g.neighbors(a).front();
    std::vector<Vertex> in(static_cast<std::size_t>(N + 1));
    for (int j = 0; j <= N; ++j) {
      in[static_cast<std::size_t>(j)] = ((j - (i - 1)) % 2 == 0) ? a : n;
    }
    in[static_cast<std::size_t>(i)] = c;
    std::vector<Vertex> out = in;
    out[static_cast<std::size_t>(i)] = b;
    auto key = std::make_pair(i, in.front());
    auto it = embedded.find(key);
    if (it == embedded.end()) {
      it = embedded
               .emplace(key, embed_with_shift(cache, f.T, in.front(), i, N))
               .first;
    }
    return it->second.block(Path(in), Path(out));
  };

  for (Vertex a : g.vertices()) {
    if (!f.complete.count(a)) {
      r.skip(a, "incomplete vertex");
      continue;
    }
    const auto& nb = g.neighbors(a);
    for (int i = 1; i <= N - 1; ++i) {
      double worst = 0.0;
      for (Vertex b : nb) {
        for (Vertex d : nb) {
          Complex sum = 0.0;
          for (Vertex c : nb) sum += e(i, a, c, d) * e(i, a, b, c);
          worst = std::max(worst, std::abs(sum - phi * e(i, a, b, d)));
        }
      }
      r.add(a, indexed("TLa", i), worst);
    }
    for (int i = 1; i <= N - 2; ++i) {
      double worst_b = 0.0;
      for (Vertex b : nb) {
        for (Vertex c : nb) {
          for (Vertex d : nb) {
            const Complex lhs = e(i, a, c, d) * e(i + 1, c, a, a) * e(i, a, b, c);
            worst_b = std::max(worst_b, std::abs(lhs - e(i, a, b, d)));
          }
        }
      }
      r.add(a, indexed("TLb", i), worst_b);
      // TLc with `a` playing the role of the middle height b; the right-hand
      // side is the generator at position i+1.
      double worst_c = 0.0;
      const Vertex mid = a;
      for (Vertex x : nb) {
        for (Vertex c : nb) {
          for (Vertex d : nb) {
            const Complex lhs =
                e(i + 1, mid, x, d) * e(i, x, mid, mid) * e(i + 1, mid, c, x);
            worst_c = std::max(worst_c, std::abs(lhs - e(i + 1, mid, c, d)));
          }
        }
      }
      r.add(a, indexed("TLc", i), worst_c);
    }
  }
  r.finalize();
  return r;
}

}  // namespace dynbax
