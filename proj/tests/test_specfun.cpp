#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "qphase/specfun.hpp"

using namespace qphase;
namespace sf = qphase::specfun;

static constexpr double kPi = 3.14159265358979323846;

TEST_CASE("laguerre basics") {
  CHECK(sf::laguerre_assoc(0, 3.7, 1.3) == 1.0);
  CHECK(sf::laguerre_assoc(0, -2.0, 10.0) == 1.0);
  // L_1^{-2}(x) = 1 + a - x = -1 - x, so (-1)^1 L_1^{-2}(x) = 1 + x
  for (double x : {0.0, 0.5, 2.0, 7.25})
    CHECK(-sf::laguerre_assoc(1, -2.0, x) == doctest::Approx(1.0 + x).epsilon(1e-14));
  // L_2(1) = 1 - 2 + 1/2 = -0.5
  CHECK(sf::laguerre_assoc(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("laguerre recurrence consistency") {
  // (n+1) L_{n+1}^a = (2n+1+a-x) L_n^a - (n+a) L_{n-1}^a, 1e-12 relative
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ax(-5.0, 5.0), xx(-50.0, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = ax(rng), x = xx(rng);
    for (int n : {1, 5, 20, 50}) {
      const double lm = sf::laguerre_assoc(n - 1, a, x);
      const double l0 = sf::laguerre_assoc(n, a, x);
      const double lp = sf::laguerre_assoc(n + 1, a, x);
      const double rhs = ((2 * n + 1 + a - x) * l0 - (n + a) * lm) / (n + 1);
      const double scale = std::max({std::abs(lp), std::abs(l0), 1.0});
      CHECK(std::abs(lp - rhs) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("jacobi basics") {
  CHECK(sf::jacobi(0, 1.5, -3.0, 0.7) == 1.0);
  // P_1^{(nu,mu)}(x) = (nu-mu)/2 + (nu+mu+2) x/2; Legendre reduction at (0,0)
  for (double x : {-0.9, 0.0, 0.3, 1.7})
    CHECK(sf::jacobi(1, 0.0, 0.0, x) == doctest::Approx(x).epsilon(1e-14));
  CHECK(sf::jacobi(1, 2.0, 1.0, 0.5) == doctest::Approx(0.5 + 2.5 * 0.5).epsilon(1e-14));
}

TEST_CASE("jacobi against explicit sum in degenerate and regular cases") {
  // sum_j C(n+nu, n-j) C(n+mu, j) ((x-1)/2)^j ((x+1)/2)^{n-j}
  auto jacobi_sum = [](int n, double nu, double mu, double x) {
    long double acc = 0.0L;
    for (int j = 0; j <= n; ++j) {
      long double b1 = 1.0L, b2 = 1.0L;
      for (int i = 0; i < n - j; ++i) b1 *= (long double)(nu + n - i) / (n - j - i);
      for (int i = 0; i < j; ++i) b2 *= (long double)(mu + n - i) / (j - i);
      acc += b1 * b2 * std::pow(0.5L * (x - 1.0L), j) * std::pow(0.5L * (x + 1.0L), n - j);
    }
    return double(acc);
  };
  for (int n : {2, 3, 5, 8}) {
    for (double nu : {0.0, 1.0, 2.5}) {
      for (double mu : {0.5, -1.0, -4.0, -7.5}) {
        for (double x : {-3.0, -0.4, 0.8, 2.0}) {
          const double ref = jacobi_sum(n, nu, mu, x);
          CHECK(sf::jacobi(n, nu, mu, x) ==
                doctest::Approx(ref).epsilon(1e-11).scale(std::max(1.0, std::abs(ref))));
        }
      }
    }
  }
}

TEST_CASE("terminating 2F1") {
  CHECK(sf::hyp2f1_terminating(0, 2.3, 4.5, 0.9) == 1.0);
  // 2F1(-1, b, c, x) = 1 - b x / c
  CHECK(sf::hyp2f1_terminating(1, 2.0, 5.0, 0.25) ==
        doctest::Approx(1.0 - 2.0 * 0.25 / 5.0).epsilon(1e-14));
  CHECK_THROWS_AS(sf::hyp2f1_terminating(3, 1.0, -1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(sf::hyp2f1_terminating(2, 1.0, 0.0, 0.5), std::domain_error);
  // c = -n is outside the finite sum and must be accepted
  CHECK_NOTHROW(sf::hyp2f1_terminating(2, 1.0, -2.0, 0.5));
}

TEST_CASE("terminating 2F1 vs exact rational oracle") {
  using oracles::Rat;
  for (int n = 0; n <= 10; ++n) {
    for (auto [bn, bd] : {std::pair{3LL, 2LL}, {1LL, 1LL}, {-5LL, 3LL}}) {
      for (auto [cn, cd] : {std::pair{7LL, 2LL}, {4LL, 1LL}}) {
        for (auto [xn, xd] : {std::pair{2LL, 1LL}, {4LL, 3LL}, {-1LL, 2LL}}) {
          const Rat ref = oracles::hyp2f1_rational(n, Rat(bn, bd), Rat(cn, cd), Rat(xn, xd));
          const double got = sf::hyp2f1_terminating(n, double(bn) / bd, double(cn) / cd,
                                                    double(xn) / xd);
          CHECK(got == doctest::Approx(ref.value())
                           .epsilon(1e-12)
                           .scale(std::max(1.0, std::abs(ref.value()))));
        }
      }
    }
  }
}

TEST_CASE("gamma at half integers") {
  CHECK(sf::gamma_half(1) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));
  CHECK(sf::gamma_half(2) == 1.0);
  CHECK(sf::gamma_half(3) == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-15));
  CHECK(sf::gamma_half(8) == doctest::Approx(6.0).epsilon(1e-15));  // Gamma(4) = 3!
  CHECK(sf::lgamma_half(8) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
  CHECK(sf::lfact(5) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
  CHECK(std::exp(sf::lgamma_half(5)) ==
        doctest::Approx(sf::gamma_half(5)).epsilon(1e-14));
}

TEST_CASE("erf basics and properties") {
  CHECK(sf::erf(0.0) == 0.0);
  // odd, monotone increasing, |erf| < 1
  double prev = -1.0;
  for (double x = -5.75; x <= 5.8; x += 0.25) {
    const double e = sf::erf(x);
    CHECK(std::abs(e) < 1.0);
    CHECK(e > prev);
    prev = e;
    CHECK(sf::erf(-x) == doctest::Approx(-e).epsilon(1e-15));
  }
  // quadrature oracle: erf(x) = 2/sqrt(pi) int_0^x e^{-t^2} dt
  for (double x : {0.3, 1.0, 2.0, 3.5}) {
    const double ref =
        2.0 / std::sqrt(kPi) *
        oracles::gauss_legendre([](double t) { return std::exp(-t * t); }, 0.0, x, 8);
    CHECK(sf::erf(x) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("complex erf agrees with quadrature along rays") {
  // erf(z) = 2/sqrt(pi) int_0^1 z e^{-(tz)^2} dt
  for (std::complex<double> z : {std::complex<double>(1.0, 1.0),
                                 std::complex<double>(0.5, -2.0),
                                 std::complex<double>(3.0, 1.5),
                                 std::complex<double>(0.0, 3.0)}) {
    auto fre = [&](double t) {
      return (z * std::exp(-(t * z) * (t * z))).real();
    };
    auto fim = [&](double t) {
      return (z * std::exp(-(t * z) * (t * z))).imag();
    };
    const double re = 2.0 / std::sqrt(kPi) * oracles::gauss_legendre(fre, 0.0, 1.0, 16);
    const double im = 2.0 / std::sqrt(kPi) * oracles::gauss_legendre(fim, 0.0, 1.0, 16);
    const auto got = sf::erf(z);
    CHECK(got.real() == doctest::Approx(re).epsilon(1e-10).scale(std::abs(got) + 1.0));
    CHECK(got.imag() == doctest::Approx(im).epsilon(1e-10).scale(std::abs(got) + 1.0));
  }
}

TEST_CASE("dilog anchors and convention") {
  CHECK(sf::dilog(1.0) == 0.0);
  CHECK(sf::dilog(2.0) == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-14));
  CHECK(std::isnan(sf::dilog(0.0)));
  CHECK(std::isnan(sf::dilog(2.5)));
  CHECK(std::isnan(sf::dilog(-1.0)));
}

TEST_CASE("dilog vs quadrature of the defining integral") {
  // dilog(x) = int_1^x ln t/(1-t) dt; integrable singularity at t=1
  for (double x = 0.1; x < 1.95; x += 0.2) {
    const double ref = oracles::tanh_sinh(
        [](double t) { return t == 1.0 ? -1.0 : std::log(t) / (1.0 - t); },
        1.0, x);
    CHECK(sf::dilog(x) == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("bessel I0") {
  CHECK(sf::bessel_i0(0.0) == 1.0);
  // I0(2) = sum 1/(k!)^2
  double ref = 0.0, f = 1.0;
  for (int k = 0; k < 30; ++k) {
    ref += 1.0 / (f * f);
    f *= (k + 1);
  }
  CHECK(sf::bessel_i0(2.0) == doctest::Approx(ref).epsilon(1e-14));
  // quadrature: I0(x) = (1/pi) int_0^pi exp(x cos t) dt
  for (double x : {0.5, 3.0, 12.0, 60.0}) {
    const double q = oracles::gauss_legendre(
                         [x](double t) { return std::exp(x * std::cos(t)); }, 0.0, kPi, 24) /
                     kPi;
    CHECK(sf::bessel_i0(x) == doctest::Approx(q).epsilon(1e-12));
  }
}

TEST_CASE("cosine and sine integrals vs quadrature") {
  // Si(x) = int_0^x sin t/t dt; Ci(x) = gamma + ln x + int_0^x (cos t - 1)/t dt
  const double gamma = 0.57721566490153286060651209008240243;
  for (double x : {0.5, 1.0, 3.9, 4.1, 10.0, 40.0, 150.0}) {
    const double si_ref = oracles::gauss_legendre(
        [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x, 256);
    const double ci_ref =
        gamma + std::log(x) +
        oracles::gauss_legendre(
            [](double t) { return t == 0.0 ? 0.0 : (std::cos(t) - 1.0) / t; }, 0.0, x, 256);
    const auto cs = sf::cisi(x);
    CHECK(cs.si == doctest::Approx(si_ref).epsilon(1e-11));
    CHECK(cs.ci == doctest::Approx(ci_ref).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("Ei on the imaginary axis") {
  // Ei(ix) = Ci(x) + i(Si(x) + pi/2) for x > 0, conjugate reflection for x < 0
  const auto p = sf::expint_ei_imag(2.5);
  const auto cs = sf::cisi(2.5);
  CHECK(p.real() == doctest::Approx(cs.ci).epsilon(1e-14));
  CHECK(p.imag() == doctest::Approx(cs.si + kPi / 2).epsilon(1e-14));
  const auto m = sf::expint_ei_imag(-2.5);
  CHECK(m.real() == doctest::Approx(p.real()).epsilon(1e-14));
  CHECK(m.imag() == doctest::Approx(-p.imag()).epsilon(1e-14));
  CHECK(std::isnan(sf::expint_ei_imag(0.0).real()));
}
