#pragma once

// Local dynamical Temperley-Lieb, Hecke and BMW operator families on graph
// groupoids, their constructors, and relation checkers.
//
// A family stores one order-2 fiber operator per vertex. Vertices listed in
// `complete` carry every block the relations need; line families built on a
// finite window leave the two window ends incomplete. A base is admissible
// for an order-N check when every vertex within distance N-2 of it is
// complete, i.e. every block used by an order-N product is complete.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dynbax/catalog.hpp"
#include "dynbax/fiber.hpp"
#include "dynbax/report.hpp"
#include "dynbax/special.hpp"

namespace dynbax {

using ScalarMap = std::map<Vertex, Complex>;
using ParamList = std::vector<std::pair<std::string, std::string>>;

/// Largest fiber (number of length-N paths from one base) a global check
/// will materialize.
inline constexpr std::size_t kMaxFiberPaths = 100000;

/// Number of length-k paths from base, by dynamic programming on Y.
std::size_t fiber_dimension(const Graph& g, Vertex base, int k);

struct FamilyBase {
  std::shared_ptr<const FiberSpaceCache> cache;
  std::set<Vertex> complete;
  std::string name;
  ParamList params;

  const Graph& graph() const { return cache->graph(); }
  bool admissible(Vertex base, int order) const;
};

struct TLFamily : FamilyBase {
  LocalOperatorMap T;
  ScalarMap kappa;
  /// Face weights S_v the blocks were built from (may be empty for
  /// user-supplied families).
  ScalarMap weight;
};

struct HeckeFamily : FamilyBase {
  LocalOperatorMap S;
  ScalarMap qbar;
};

struct BMWFamily : FamilyBase {
  LocalOperatorMap U;
  LocalOperatorMap U_inv;
  /// K = id - (U - U^-1)/(qbar - qbar^-1).
  LocalOperatorMap K;
  ScalarMap qbar;
  ScalarMap nubar;
};

/// Order-2 TL blocks from face weights: at d, the round trip d->a->d maps
/// to d->c->d with weight S_a/S_d when a = c and sqrt(S_a S_c)/S_d
/// (principal branch) otherwise. Throws SingularityError if |S_d| < 1e-12.
TLFamily tl_from_weights(const Graph& g, const ScalarMap& weight,
                         const ScalarMap& kappa, std::set<Vertex> complete,
                         std::string name);

/// Graph TL family with S = PF eigenvector and constant kappa = phi(Y).
TLFamily build_TL_graph(const Graph& g, const PFData& pf);

enum class LineKind { Tri, Hyp, Ell };

std::string line_kind_name(LineKind k);
LineKind parse_line_kind(const std::string& s);

/// Finite window of the unrestricted line: vertex k (lo <= k <= hi) stands
/// for the object k + shift_b.
struct LineParams {
  LineKind kind = LineKind::Tri;
  EllipticParams ell;  // L and shift_b are used by every kind
  int lo = 1;
  int hi = 13;

  double object(Vertex k) const { return k + ell.shift_b; }
};

/// The bracket of the chosen kind evaluated at x.
Complex line_bracket(const LineParams& p, Complex x);

/// Path graph lo - lo+1 - ... - hi.
Graph line_graph(int lo, int hi);

/// Tri / hyp / ell family on the window; the two ends are incomplete.
/// kappa is 2cos(pi/(L+1)), 2cosh(pi/(L+1)) or ([a+1]+[a-1])/[a].
/// Throws InputError for a window shorter than 5 vertices and
/// SingularityError when a needed bracket is below 1e-12.
TLFamily build_TL_line(const LineParams& p);

/// Root of q + 1/q = kappa on the closed upper half plane (q = e^{i lambda}
/// for kappa = 2cos lambda).
Complex qbar_from_kappa(Complex kappa);

/// S(a) = qbar(a) id - T(a). Throws InputError when qbar + 1/qbar differs
/// from kappa by more than 1e-10 or qbar + 1/qbar = 0.
HeckeFamily hecke_from_TL(const TLFamily& tl, const ScalarMap& qbar);
/// Same with qbar = qbar_from_kappa(kappa) at every vertex.
HeckeFamily hecke_from_TL(const TLFamily& tl);

/// T(a) = qbar(a) id - S(a).
TLFamily tl_from_hecke(const HeckeFamily& h);

/// Computes U^-1 and K. Throws InversionError naming a vertex with
/// singular U and DomainError when qbar = qbar^-1.
BMWFamily make_BMW(std::shared_ptr<const FiberSpaceCache> cache,
                   LocalOperatorMap U, ScalarMap qbar, ScalarMap nubar,
                   std::set<Vertex> complete, std::string name);

/// Hecke-degenerate BMW family U := S (so K = 0) with constant nubar.
BMWFamily bmw_from_hecke(const HeckeFamily& h, Complex nubar);

/// Local TL relations T^2 = kappa T, T12 T23 T12 = T12, T23 T12 T23 = T23
/// at every base; inadmissible bases are skipped and recorded.
Report check_dTL(const TLFamily& f, double tol);

/// Hecke quadratic relation and dynamical braid relation.
Report check_dHecke(const HeckeFamily& f, double tol);

/// The four BMW relations, with both signs of epsilon.
Report check_dBMW(const BMWFamily& f, double tol);

/// Global TL relations of T_i(a) = T^{(i,i+1)}(ah^{i-1}) on order-N fibers.
/// Throws InputError for N < 3 and PreconditionError when a fiber exceeds
/// kMaxFiberPaths.
Report check_global(const TLFamily& f, int N, double tol);

/// Global Hecke relations of S_i(a) on order-N fibers.
Report check_global_hecke(const HeckeFamily& f, int N, double tol);

/// Murphy elements J_1 = S_1^2, J_i = S_i J_{i-1} S_i and their commutation
/// relations on order-N fibers. Throws PreconditionError for non-constant
/// qbar and InputError for N < 3.
Report murphy_check(const HeckeFamily& f, int N, double tol);

/// Component relations of the diagram algebra dTL(N, phi), with
/// e_i(a)[b,c] read off the embedded T_i. Throws PreconditionError for
/// non-constant kappa.
Report check_diagram_algebra(const TLFamily& f, int N, double tol);

/// Max over complete vertices of |kappa| variation, used to decide whether
/// a family has constant kappa.
bool is_constant(const ScalarMap& m, double tol = 1e-12);

}  // namespace dynbax
