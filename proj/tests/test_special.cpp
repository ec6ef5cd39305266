#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dynbax/errors.hpp"
#include "dynbax/special.hpp"

using namespace dynbax;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

/// 50-term direct partial sum, n = -25 .. 24.
Complex theta_direct(Complex z, Complex tau) {
  Complex s = 0.0;
  for (int n = -25; n < 25; ++n) {
    const double h = n + 0.5;
    s += std::exp(I * kPi * h * h * tau + 2.0 * kPi * I * h * (z + 0.5));
  }
  return -s;
}

}  // namespace

TEST_SUITE("special-functions") {

TEST_CASE("theta agrees with a direct 50-term sum") {
  const Complex tau(0.0, 0.8);
  CHECK(std::abs(theta(0.3, tau) - theta_direct(0.3, tau)) < 1e-12);
  CHECK(std::abs(theta(Complex(0.1, 0.2), tau) - theta_direct(Complex(0.1, 0.2), tau)) < 1e-12);
  CHECK(std::abs(theta(0.0, I)) < 1e-13);
}

TEST_CASE("theta is odd and anti-periodic") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Complex tau(0.1, 0.9);
  for (int i = 0; i < 100; ++i) {
    const Complex z(u(rng), u(rng));
    CHECK(std::abs(theta(-z, tau) + theta(z, tau)) < 1e-12);
    CHECK(std::abs(theta(z + 1.0, tau) + theta(z, tau)) < 1e-12);
  }
}

TEST_CASE("theta rejects the lower half plane") {
  CHECK_THROWS_AS(theta(0.1, Complex(0.0, -1.0)), DomainError);
  CHECK_THROWS_AS(theta(0.1, Complex(1.0, 0.0)), DomainError);
}

TEST_CASE("theta_prime matches a central difference") {
  const Complex tau(0.0, 0.8);
  const double h = 1e-5;
  const Complex fd = (theta(0.2 + h, tau) - theta(0.2 - h, tau)) / (2.0 * h);
  CHECK(std::abs(theta_prime(0.2, tau) - fd) < 1e-8);
}

TEST_CASE("elliptic bracket normalization") {
  EllipticParams p;
  p.tau = Complex(0.0, 0.8);
  p.L = 4;
  CHECK(std::abs(bracket_ell(0.0, p)) < 1e-14);
  CHECK(std::abs(bracket_ell(1e-5, p) / 1e-5 - 1.0) < 1e-8);
  // [h]/h - 1 shrinks at least linearly in h.
  const double c = std::abs(bracket_ell(1e-3, p) / 1e-3 - 1.0) / 1e-3;
  for (double h : {1e-4, 1e-5}) {
    CHECK(std::abs(bracket_ell(h, p) / h - 1.0) <= c * h + 1e-11);
  }
}

TEST_CASE("elliptic bracket degenerates to the trigonometric one") {
  EllipticParams p;
  p.tau = Complex(0.0, 10.0);
  p.L = 4;
  for (double z : {0.1, 0.35, 0.5, 0.8, 0.95}) {
    const Complex expect = bracket_tri(z, p.L) * (p.L + 1.0) / kPi;
    CHECK(std::abs(bracket_ell(z, p) - expect) < 1e-6);
  }
}

TEST_CASE("elliptic parameter validation") {
  EllipticParams p;
  p.tau = Complex(0.0, -0.5);
  CHECK_THROWS_AS(p.validate(), InputError);
  p.tau = Complex(0.0, 0.8);
  p.L = 1;
  CHECK_THROWS_AS(p.validate(), InputError);
  p.L = 4;
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("trigonometric and hyperbolic brackets") {
  CHECK(std::abs(bracket_tri(1.0, 3) - std::sin(kPi / 4)) < 1e-15);
  CHECK(std::abs(bracket_tri(1.0, 3) - 0.7071067812) < 1e-10);
  CHECK(std::abs(bracket_hyp(1.0, 3) - std::sinh(kPi / 4)) < 1e-15);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double a = u(rng), z = u(rng);
    for (int L : {3, 4, 7}) {
      CHECK(std::abs(bracket_tri(L + 1 - z, L) - bracket_tri(z, L)) < 1e-12);
      const Complex lhs = bracket_tri(a + z, L) * bracket_tri(1.0, L);
      const Complex rhs = bracket_tri(a, L) * bracket_tri(1.0 - z, L) +
                          bracket_tri(z, L) * bracket_tri(a + 1.0, L);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("branch_sqrt is deterministic on the negative axis") {
  CHECK(branch_sqrt(Complex(-4.0, 1e-20)) == Complex(0.0, 2.0));
  CHECK(branch_sqrt(Complex(-4.0, -1e-20)) == Complex(0.0, 2.0));
  CHECK(branch_sqrt(Complex(9.0, 0.0)) == Complex(3.0, 0.0));
  CHECK(std::abs(branch_sqrt(Complex(0.0, 2.0)) - Complex(1.0, 1.0)) < 1e-15);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("0.0+0.8i") == Complex(0.0, 0.8));
  CHECK(parse_complex("-1.5") == Complex(-1.5, 0.0));
  CHECK(parse_complex("2i") == Complex(0.0, 2.0));
  CHECK(parse_complex("1e-3-2e-1i") == Complex(1e-3, -0.2));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("1+2j") == Complex(1.0, 2.0));
  for (const char* bad : {"", "abc", "1+", "1+2", "1+2k", "0.8i0"}) {
    CHECK_THROWS_AS(parse_complex(bad), InputError);
  }
  const Complex z(0.1, -1.0 / 3.0);
  CHECK(parse_complex(format_complex(z)) == z);
}

}  // TEST_SUITE
