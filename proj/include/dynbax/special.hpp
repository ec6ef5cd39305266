#pragma once

// Odd Jacobi theta function and the three brackets that enter every face
// weight: the elliptic [z], the trigonometric <z> and the hyperbolic [[z]].

#include <complex>
#include <string>

namespace dynbax {

using Complex = std::complex<double>;

inline constexpr double kDefaultThetaTol = 1e-13;
inline constexpr int kMaxThetaTerms = 10000;

/// theta(z, tau) = -sum_n exp(i pi (n+1/2)^2 tau + 2 pi i (n+1/2)(z+1/2)).
///
/// The series is summed over n in [-M, M-1], pairing n with -n-1 (equal
/// (n+1/2)^2), and stops once the summed magnitude of the last pair falls
/// below tol * (|partial sum| + 1). Throws DomainError for Im(tau) <= 0 and
/// NumericError when 10^4 terms do not reach the tolerance.
Complex theta(Complex z, Complex tau, double tol = kDefaultThetaTol);

/// d theta / dz, from the term-wise differentiated series.
Complex theta_prime(Complex z, Complex tau, double tol = kDefaultThetaTol);

struct EllipticParams {
  Complex tau{0.0, 1.0};
  int L = 4;
  double shift_b = 0.2024;

  /// Throws InputError unless Im(tau) > 0, L >= 2 and 1/(L+1) is not a
  /// lattice point of Z + tau Z.
  void validate() const;
};

/// [z] = theta(z/(L+1), tau) / (theta'(0, tau)/(L+1)), normalized so that
/// [z]/z -> 1 as z -> 0.
Complex bracket_ell(Complex z, const EllipticParams& params,
                    double tol = kDefaultThetaTol);

/// <z> = sin(pi z / (L+1)).
Complex bracket_tri(Complex z, int L);

/// [[z]] = sinh(pi z / (L+1)).
Complex bracket_hyp(Complex z, int L);

/// Principal square root after snapping a negligible imaginary part
/// (|Im x| <= 1e-14 |x|) to +0, so that real negative radicands always give
/// +i sqrt|x| regardless of the sign of a rounding-level imaginary part.
Complex branch_sqrt(Complex x);

/// Parses "RE+IMi", "RE-IMi", "RE", "IMi" (e.g. "0.0+0.8i"). Throws
/// InputError on malformed text.
Complex parse_complex(const std::string& text);
std::string format_complex(Complex z);

}  // namespace dynbax
