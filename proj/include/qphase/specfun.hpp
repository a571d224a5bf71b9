#ifndef QPHASE_SPECFUN_HPP
#define QPHASE_SPECFUN_HPP

#include <complex>

namespace qphase::specfun {

// Associated Laguerre polynomial L_n^a(x) by the three-term recurrence.
// The upper index may be any real number (negative integers included).
template <class Scalar>
Scalar laguerre_assoc_t(int n, Scalar a, Scalar x) {
  Scalar p0 = Scalar(1.0);
  if (n == 0) return p0;
  Scalar p1 = Scalar(1.0) + a - x;
  for (int k = 1; k < n; ++k) {
    Scalar p2 = ((Scalar(2.0 * k + 1.0) + a - x) * p1 -
                 (Scalar(double(k)) + a) * p0) /
                Scalar(double(k + 1));
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double laguerre_assoc(int n, double a, double x);

// Jacobi polynomial P_n^{(nu,mu)}(x); P_0 = 1.  Uses the three-term
// recurrence where its denominators stay away from zero and the exact
// terminating sum for the degenerate parameter set (nu+mu a negative
// integer), which occurs throughout the G-coefficient formulas.
double jacobi(int n, double nu, double mu, double x);

// Terminating Gauss series 2F1(-n, b, c, x).  Throws std::domain_error when
// c hits a pole inside the finite sum (c in {0, -1, ..., -(n-1)}).
double hyp2f1_terminating(int n, double b, double c, double x);

// Gamma at integer and half-integer points: gamma_half(k2) = Gamma(k2/2).
double gamma_half(int k2);
double lgamma_half(int k2);  // log Gamma(k2/2)
double lfact(int n);         // log n!

double erf(double x);
std::complex<double> erf(std::complex<double> z);  // reliable for |z| <~ 5

// dilog(x) = integral_1^x ln t/(1-t) dt = Li2(1-x), domain (0, 2];
// NaN outside.  dilog(1) = 0, dilog(2) = -pi^2/12.
double dilog(double x);

double bessel_i0(double x);

// Cosine and sine integrals, x > 0.
struct CiSi {
  double ci;
  double si;
};
CiSi cisi(double x);

// Ei(i x) = Ci(|x|) + i (Si(|x|) + pi/2) for x > 0, conjugate for x < 0.
// NaN at x = 0 (logarithmic singularity).
std::complex<double> expint_ei_imag(double x);

}  // namespace qphase::specfun

#endif
