#include "dynbax/special.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "dynbax/errors.hpp"

namespace dynbax {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Sums -sum_n c(n) exp(...) with the paired symmetric truncation; `weight`
// supplies the prefactor (1 for theta, 2 pi i (n+1/2) for its derivative).
template <typename Weight>
Complex theta_series(Complex z, Complex tau, double tol, Weight weight) {
  if (tau.imag() <= 0.0) {
    throw DomainError("theta requires Im(tau) > 0");
  }
  if (!(tol > 0.0)) throw DomainError("theta tolerance must be positive");
  Complex sum = 0.0;
  for (int m = 0; 2 * m < kMaxThetaTerms; ++m) {
    const double up = m + 0.5;     // n = m
    const double down = -m - 0.5;  // n = -m-1
    const Complex t1 = weight(up) * std::exp(kI * kPi * up * up * tau +
                                             2.0 * kPi * kI * up * (z + 0.5));
    const Complex t2 = weight(down) * std::exp(kI * kPi * down * down * tau +
                                               2.0 * kPi * kI * down * (z + 0.5));
    sum += t1 + t2;
    if (std::abs(t1) + std::abs(t2) < tol * (std::abs(sum) + 1.0)) {
      return -sum;
    }
  }
  throw NumericError("theta series did not converge within 10^4 terms");
}

}  // namespace

Complex theta(Complex z, Complex tau, double tol) {
  return theta_series(z, tau, tol, [](double) { return Complex(1.0); });
}

Complex theta_prime(Complex z, Complex tau, double tol) {
  return theta_series(z, tau, tol,
                      [](double h) { return 2.0 * kPi * kI * h; });
}

void EllipticParams::validate() const {
  if (tau.imag() <= 0.0) throw InputError("tau must have Im(tau) > 0");
  if (L < 2) throw InputError("L must be at least 2");
  // 1/(L+1) = m + n tau has n = Im(x)/Im(tau) and m = Re(x - n tau).
  const Complex x(1.0 / (L + 1), 0.0);
  const double n = std::round(x.imag() / tau.imag());
  const double m = std::round((x - n * tau).real());
  if (std::abs(x - m - n * tau) < 1e-12) {
    throw InputError("1/(L+1) lies on the lattice Z + tau Z");
  }
}

Complex bracket_ell(Complex z, const EllipticParams& params, double tol) {
  const double l1 = params.L + 1.0;
  return theta(z / l1, params.tau, tol) /
         (theta_prime(0.0, params.tau, tol) / l1);
}

Complex bracket_tri(Complex z, int L) { return std::sin(kPi * z / (L + 1.0)); }

Complex bracket_hyp(Complex z, int L) {
  return std::sinh(kPi * z / (L + 1.0));
}

Complex branch_sqrt(Complex x) {
  if (std::abs(x.imag()) <= 1e-14 * std::abs(x)) x = Complex(x.real(), 0.0);
  return std::sqrt(x);
}

Complex parse_complex(const std::string& text) {
  auto fail = [&] { return InputError("malformed complex number '" + text + "'"); };
  if (text.empty()) throw fail();
  std::string s = text;
  bool imaginary_only = false;
  if (s.back() == 'i' || s.back() == 'j') {
    s.pop_back();
    // split at the last sign that is not an exponent sign or leading sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    if (split == std::string::npos) {
      imaginary_only = true;
    } else {
      std::string re = s.substr(0, split);
      std::string im = s.substr(split);
      if (im == "+" || im == "-") im += "1";
      try {
        std::size_t used_re = 0;
        std::size_t used_im = 0;
        const double r = std::stod(re, &used_re);
        const double i = std::stod(im, &used_im);
        if (used_re != re.size() || used_im != im.size()) throw fail();
        return {r, i};
      } catch (const std::logic_error&) {
        throw fail();
      }
    }
  }
  try {
    if (imaginary_only && (s.empty() || s == "+" || s == "-")) s += "1";
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw fail();
    return imaginary_only ? Complex(0.0, v) : Complex(v, 0.0);
  } catch (const std::logic_error&) {
    throw fail();
  }
}

std::string format_complex(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace dynbax
