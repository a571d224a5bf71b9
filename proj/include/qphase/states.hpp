#ifndef QPHASE_STATES_HPP
#define QPHASE_STATES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qphase {

using Complex = std::complex<double>;

// Raised when the requested truncation leaves more than `eps` probability in
// the discarded tail.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultTailEps = 1e-10;

// Single-mode pure state over number states 0..N.  Unit norm after
// construction; `tail_mass` records the probability discarded by the
// truncation, `vartheta0` the state's mean-phase direction used for the
// default symmetrized window.
struct FockState1 {
  Eigen::VectorXcd c;
  double tail_mass = 0.0;
  double vartheta0 = 0.0;

  int truncation() const { return int(c.size()) - 1; }
  double norm2() const { return c.squaredNorm(); }
  double mean_n() const;
};

// Two-mode pure state as a sparse list of (n1, n2, amplitude), kept sorted by
// (n1, n2) with no duplicate keys.
struct FockState2 {
  struct Term {
    int n1;
    int n2;
    Complex amp;
  };
  std::vector<Term> terms;
  int N1 = 0, N2 = 0;
  double tail_mass = 0.0;

  double norm2() const;
  double mean_n1() const;
  double mean_n2() const;
};

// Exactly normalized state of the (sigma+1)-dimensional space.
struct FiniteDimState {
  Eigen::VectorXcd c;
  int sigma() const { return int(c.size()) - 1; }
};

namespace states {

// Truncation heuristics: Poisson-like tails die past nbar + 10 sqrt(nbar+1);
// squeezed tails decay only geometrically in tanh^2(r) and need far more room.
int default_truncation(double nbar);
int squeezed_truncation(Complex alpha0, double r, double eps = kDefaultTailEps);

FockState1 fock(int n, int N);
FockState1 coherent(Complex alpha0, int N, double eps = kDefaultTailEps);
FockState1 squeezed(Complex alpha0, double r, double eta, int N,
                    double eps = kDefaultTailEps);
FockState1 displaced_number(Complex alpha0, int n0, int N,
                            double eps = kDefaultTailEps);
FockState1 cat(Complex alpha, double gamma, int N, double eps = kDefaultTailEps);
FockState1 kitten(Complex alpha0, const std::vector<double>& phis,
                  const std::vector<Complex>& cs, int N,
                  double eps = kDefaultTailEps);

FockState2 two_mode_squeezed_vacuum(double r, double phi, int N,
                                    double eps = kDefaultTailEps);
FockState2 pair_coherent(Complex zeta, int q, int N, double eps = kDefaultTailEps);

FiniteDimState fd_coherent_truncated(Complex alpha_bar, int sigma);
FiniteDimState fd_coherent_displacement(Complex alpha, int sigma);
// Hermite-root expansion (B.9 route), a cross-check for small sigma.
FiniteDimState fd_coherent_displacement_hermite(Complex alpha, int sigma);

Complex overlap(const FockState1& a, const FockState1& b);
Complex overlap(const FiniteDimState& a, const FiniteDimState& b);
// overlap of a finite-dimensional state with the Glauber coherent state
Complex overlap_glauber(const FiniteDimState& a, Complex alpha);

}  // namespace states
}  // namespace qphase

#endif
