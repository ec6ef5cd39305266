#pragma once

// Spectral parameterizations, the functional relation behind the TL ansatz,
// the Hecke / TL / BMW Baxterizations, the ABF elliptic R-matrix, and
// dynamical Yang-Baxter checkers.

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dynbax/operators.hpp"

namespace dynbax {

enum class ParamKind { Tri, Hyp, Rational, Custom };

/// x = f(z) together with the distance of z to the pole set of f.
struct SpectralParam {
  ParamKind kind = ParamKind::Custom;
  std::string name;
  /// lambda of sin z / sin(lambda - z) and sinh z / sinh(lambda - z).
  double lambda = 0.0;
  /// Natural unit: a unit-box sample s is used at z = scale * s.
  double scale = 1.0;
  std::function<Complex(Complex)> eval;
  std::function<double(Complex)> pole_distance;

  Complex operator()(Complex z) const { return eval(z); }
};

/// sin z / sin(lambda - z); poles at lambda + k pi; natural unit lambda.
SpectralParam tri_param(double lambda);
/// sinh z / sinh(lambda - z); poles at lambda + i k pi; natural unit lambda.
SpectralParam hyp_param(double lambda);
/// z / (1 - z); pole at 1.
SpectralParam rational_param();
SpectralParam custom_param(std::string name, std::function<Complex(Complex)> f,
                           std::function<double(Complex)> pole_distance);
/// "tri" | "hyp" | "rational"; lambda is ignored for rational.
SpectralParam param_by_name(const std::string& name, double lambda);

/// Samples closer than this to a pole are skipped.
inline constexpr double kPoleGuard = 1e-8;

/// n points of the 2-D Halton sequence (bases 2 and 3) mapped affinely to
/// (0.05, 0.45)^2. Deterministic; the default sweep uses n = 20.
std::vector<std::pair<double, double>> sample_grid(int n = 20);

/// The sample grid in the natural units of f.
std::vector<std::pair<Complex, Complex>> scaled_samples(const SpectralParam& f,
                                                        int n = 20);

/// |f(z'-z)(1 + kappa f(z) + f(z) f(z')) - (f(z') - f(z))|.
double functional_residual(const SpectralParam& f, Complex kappa, Complex z,
                           Complex zp);

/// Evaluates the functional relation for kappa(a) and kappa(ah^1) at every
/// complete vertex a and every neighbor, over the given (z, z') samples.
/// When kappa is non-constant on the complete vertices the obstruction
/// max |kappa(a) - kappa(b)| over complete edges is added as a warning and
/// as the "obstruction" parameter.
Report check_functional_relation(const SpectralParam& f, const FamilyBase& fam,
                                 const ScalarMap& kappa,
                                 const std::vector<std::pair<Complex, Complex>>& samples,
                                 double tol);

/// max |kappa(a) - kappa(b)| over edges between complete vertices.
double kappa_obstruction(const FamilyBase& fam, const ScalarMap& kappa);

/// Report that passes when the obstruction exceeds threshold (one item per
/// complete edge).
Report check_kappa_obstruction(const TLFamily& f, double threshold);

/// Spectral-parameter dependent family of order-2 operators.
struct RFamily : FamilyBase {
  std::string kind;
  std::function<FiberOperator(Complex z, Vertex a)> R;
  /// Natural unit for the default (z, w) sweep.
  double scale = 1.0;

  /// R(z, .) on the given vertices (all vertices when empty).
  LocalOperatorMap at(Complex z, const std::vector<Vertex>& vertices = {}) const;
};

/// Two-parameter family R(u, v)[a] of the BMW Baxterization.
struct RFamily2 : FamilyBase {
  std::function<FiberOperator(Complex u, Complex v, Vertex a)> R;

  LocalOperatorMap at(Complex u, Complex v,
                      const std::vector<Vertex>& vertices = {}) const;
};

/// R(z, a) = id + f(z) T(a). The functional relation is checked first on
/// the default samples; a failing family raises PreconditionError whose
/// message carries the obstruction.
RFamily baxterize_TL(const TLFamily& family, const SpectralParam& f,
                     double tol = 1e-12);

/// sigma(a) = i S(a) and f(a) = i (qbar(a) - qbar(a)^-1).
struct SigmaData {
  LocalOperatorMap sigma;
  ScalarMap f;
};
SigmaData sigma_from_hecke(const HeckeFamily& h);

/// R(z, a) = e^z sigma(a) + e^-z sigma(a)^-1. Requires sigma + sigma^-1 =
/// f id (to 1e-10) on complete vertices and f constant there; throws
/// PreconditionError otherwise and InversionError for singular sigma.
RFamily baxterize_Hecke(const FamilyBase& base, const SigmaData& s);

/// R(u, v)[a] = U + c/(v/u - 1) id + c/(1 + nubar^-1 qbar v/u) K with
/// c = qbar - qbar^-1. Throws PreconditionError when qbar or nubar varies
/// along an edge.
RFamily2 baxterize_BMW(const BMWFamily& family);

/// Single evaluation; DomainError names the vanishing denominator.
FiberOperator bmw_R(const BMWFamily& family, Complex u, Complex v, Vertex a);

/// ABF elliptic R-matrix on the fiber at window vertex k (object k + b).
/// Straight paths weigh 1; the round trips a->a+-1->a weigh
/// [a+-z][1]/([a][1-z]) and the cross blocks sqrt([a-1][a+1])[z]/([a][1-z]).
/// Throws DomainError when [a] or [1-z] vanishes.
FiberOperator build_ABF_R(const FiberSpaceCache& line, const EllipticParams& params,
                          Complex z, Vertex k);

/// ABF family on the window of p (p.kind is ignored).
RFamily abf_family(const LineParams& p);

/// Max residual of R23(z-w, ah1) R12(z, a) R23(w, ah1) against
/// R12(w, a) R23(z, ah1) R12(z-w, a) on the order-3 fiber at a.
double dybe_residual(const RFamily& R, Vertex a, Complex z, Complex w);

/// Generalized form with precomputed x, x', x'' for a TL-ansatz family:
/// R23(x) R12(x') R23(x'') against R12(x'') R23(x') R12(x), R(x) = id + x T.
double gdybe_residual(const TLFamily& f, Vertex a, Complex x, Complex xp,
                      Complex xpp);

/// Two-parameter form R12(u2,u3) R23(u1,u3) R12(u1,u2) against
/// R23(u1,u2) R12(u1,u3) R23(u2,u3).
double dybe2_residual(const RFamily2& R, Vertex a, Complex u1, Complex u2,
                      Complex u3);

/// dYBE over all admissible bases and the given samples.
Report check_dYBE(const RFamily& R, const std::vector<std::pair<Complex, Complex>>& samples,
                  double tol);
/// dYBE at the default sweep in the family's natural units.
Report check_dYBE(const RFamily& R, double tol, int n_samples = 20);

/// The five fixed (u1, u2, u3) triples of the default BMW sweep.
std::vector<std::array<double, 3>> default_triples();

Report check_dYBE_2param(const RFamily2& R,
                         const std::vector<std::array<double, 3>>& triples,
                         double tol);

/// Entrywise |R_ell(z, a; tau) - R_tri(z, a)| on the order-2 fiber at each
/// (z, a) pair, with R_tri = id + <z>/<1-z> T_tri(a).
Report check_degeneration(const LineParams& p,
                          const std::vector<std::pair<double, Vertex>>& points,
                          double tol);

}  // namespace dynbax
