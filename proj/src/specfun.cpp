#include "qphase/specfun.hpp"

#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "qphase/ddouble.hpp"

namespace qphase::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Cumulative log Gamma(k/2) table, built in double-double so the absolute
// error stays ~1e-14 even for arguments in the thousands.
std::vector<double>& lgamma_half_table() {
  static std::vector<double> table;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) {
    const int n = 20001;  // Gamma(k/2), k = 1..n
    table.resize(n + 1);
    table[1] = std::log(kSqrtPi);  // Gamma(1/2)
    table[2] = 0.0;                // Gamma(1)
    DDouble acc_h(table[1]);
    DDouble acc_i(0.0);
    for (int k = 3; k <= n; ++k) {
      // Gamma(k/2) = (k/2 - 1) Gamma(k/2 - 1)
      DDouble& acc = (k % 2 == 1) ? acc_h : acc_i;
      acc += DDouble(std::log(0.5 * (k - 2)));
      table[k] = to_double(acc);
    }
  }
  return table;
}

}  // namespace

double laguerre_assoc(int n, double a, double x) {
  return laguerre_assoc_t<double>(n, a, x);
}

namespace {

// Exact terminating Jacobi sum
//   P_n^{(nu,mu)}(x) = sum_j C(n+nu, n-j) C(n+mu, j) ((x-1)/2)^j ((x+1)/2)^{n-j}
// with generalized binomials; valid for any real nu, mu.
template <class Scalar>
Scalar jacobi_sum_t(int n, double nu, double mu, double x) {
  const Scalar xm(0.5 * (x - 1.0));
  const Scalar xp(0.5 * (x + 1.0));
  // binom1[j] = C(n+nu, n-j), binom2[j] = C(n+mu, j)
  Scalar acc(0.0);
  for (int j = 0; j <= n; ++j) {
    Scalar b1(1.0);
    for (int i = 0; i < n - j; ++i) b1 *= Scalar(nu + n - i) / Scalar(double(n - j - i));
    Scalar b2(1.0);
    for (int i = 0; i < j; ++i) b2 *= Scalar(mu + n - i) / Scalar(double(j - i));
    Scalar t = b1 * b2;
    for (int i = 0; i < j; ++i) t *= xm;
    for (int i = 0; i < n - j; ++i) t *= xp;
    acc += t;
  }
  return acc;
}

bool jacobi_recurrence_safe(int n, double nu, double mu) {
  const double c = nu + mu;
  for (int k = 2; k <= n; ++k) {
    if (std::abs(k + c) < 0.5) return false;        // (k + nu + mu) near 0
    if (std::abs(2 * k + c - 2.0) < 0.5) return false;
    if (std::abs(2 * k + c - 1.0) < 0.5) return false;
  }
  return true;
}

}  // namespace

double jacobi(int n, double nu, double mu, double x) {
  if (n == 0) return 1.0;
  const double p1 = 0.5 * (nu - mu) + 0.5 * (nu + mu + 2.0) * x;
  if (n == 1) return p1;
  if (!jacobi_recurrence_safe(n, nu, mu))
    return to_double(jacobi_sum_t<DDouble>(n, nu, mu, x));
  double pm2 = 1.0, pm1 = p1;
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + nu + mu;
    const double a1 = 2.0 * k * (k + nu + mu) * (c - 2.0);
    const double a2 = (c - 1.0) * (nu * nu - mu * mu);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (k + nu - 1.0) * (k + mu - 1.0) * c;
    const double p = ((a2 + a3 * x) * pm1 - a4 * pm2) / a1;
    pm2 = pm1;
    pm1 = p;
  }
  return pm1;
}

double hyp2f1_terminating(int n, double b, double c, double x) {
  if (n < 0) throw std::domain_error("hyp2f1_terminating: n must be >= 0");
  for (int k = 0; k < n; ++k) {
    if (c == -double(k))
      throw std::domain_error("hyp2f1_terminating: c is a nonpositive integer inside the sum");
  }
  DDouble term(1.0), acc(1.0);
  for (int k = 0; k < n; ++k) {
    term *= DDouble(double(-(n - k))) * DDouble(b + k) * DDouble(x) /
            (DDouble(c + k) * DDouble(double(k + 1)));
    acc += term;
  }
  return to_double(acc);
}

double lgamma_half(int k2) {
  const auto& t = lgamma_half_table();
  if (k2 < 1 || k2 >= int(t.size()))
    throw std::domain_error("lgamma_half: argument out of table range");
  return t[k2];
}

double gamma_half(int k2) {
  if (k2 < 1) throw std::domain_error("gamma_half: argument must be positive");
  if (k2 > 350) return std::numeric_limits<double>::infinity();
  double g = (k2 % 2 == 0) ? 1.0 : kSqrtPi;
  for (int k = (k2 % 2 == 0) ? 2 : 1; k < k2 - 1; k += 2) g *= 0.5 * k;
  return g;
}

double lfact(int n) { return lgamma_half(2 * n + 2); }

namespace {

// erf via the confluent series erf(z) = (2/sqrt(pi)) z e^{-z^2} M(1,3/2,z^2);
// the series has positive coefficients, so for real z it never cancels.
template <class T>
T erf_series(T z) {
  T w = z * z;
  T term(1.0), acc(1.0);
  for (int k = 0; k < 400; ++k) {
    term *= w / T(1.5 + k);
    acc += term;
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return T(2.0 / kSqrtPi) * z * std::exp(-w) * acc;
}

}  // namespace

double erf(double x) {
  if (x != x) return x;
  if (x >= 6.0) return 1.0;
  if (x <= -6.0) return -1.0;
  return erf_series(x);
}

std::complex<double> erf(std::complex<double> z) {
  return erf_series(z);
}

namespace {

double li2_series(double z) {  // |z| <= 0.5
  double term = z, acc = z;
  for (int k = 2; k < 200; ++k) {
    term *= z;
    const double add = term / double(k * k);
    acc += add;
    if (std::abs(add) < 1e-18 * std::abs(acc) + 1e-300) break;
  }
  return acc;
}

double li2(double z) {  // z in [-1, 1)
  if (z == 0.0) return 0.0;
  if (std::abs(z) <= 0.5) return li2_series(z);
  if (z > 0.5) return kPi * kPi / 6.0 - std::log(z) * std::log1p(-z) - li2_series(1.0 - z);
  // z in [-1, -0.5): Landen, z/(z-1) in (1/3, 1/2]
  const double l = std::log1p(-z);
  return -li2_series(z / (z - 1.0)) - 0.5 * l * l;
}

}  // namespace

double dilog(double x) {
  if (!(x > 0.0) || x > 2.0) return kNaN;
  return li2(1.0 - x);
}

double bessel_i0(double x) {
  x = std::abs(x);
  if (x > 700.0) throw std::overflow_error("bessel_i0: argument too large");
  const double q = 0.25 * x * x;
  double term = 1.0, acc = 1.0;
  for (int k = 1; k < 1000; ++k) {
    term *= q / double(k * k);
    acc += term;
    if (term < 1e-18 * acc) break;
  }
  return acc;
}

CiSi cisi(double x) {
  if (!(x > 0.0)) throw std::domain_error("cisi: requires x > 0");
  if (x <= 4.0) {
    // Si = sum (-1)^k x^{2k+1}/((2k+1)(2k+1)!),  term = (-1)^k x^{2k+1}/(2k+1)!
    double si = 0.0, term = x;
    for (int k = 0; k < 60; ++k) {
      si += term / double(2 * k + 1);
      term *= -x * x / double((2 * k + 2) * (2 * k + 3));
      if (std::abs(term) < 1e-18) break;
    }
    double ci = kEulerGamma + std::log(x);
    term = 1.0;
    for (int k = 1; k < 60; ++k) {
      term *= -x * x / double((2 * k - 1) * (2 * k));
      ci += term / double(2 * k);
      if (std::abs(term) < 1e-18) break;
    }
    return {ci, si};
  }
  // Lentz continued fraction for E1(ix), x > 4 (Numerical Recipes cisi)
  const std::complex<double> I(0.0, 1.0);
  std::complex<double> b = 1.0 + I * x;
  std::complex<double> c = 1.0 / 1e-100;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 2; i < 200; ++i) {
    const double a = -double(i - 1) * double(i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  h *= std::polar(1.0, -x);
  return {-h.real(), kPi / 2.0 + h.imag()};
}

std::complex<double> expint_ei_imag(double x) {
  if (x == 0.0) return {kNaN, kNaN};
  const CiSi cs = cisi(std::abs(x));
  if (x > 0.0) return {cs.ci, cs.si + kPi / 2.0};
  return {cs.ci, -(cs.si + kPi / 2.0)};
}

}  // namespace qphase::specfun
