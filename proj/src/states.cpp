#include "qphase/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qphase/grids.hpp"
#include "qphase/specfun.hpp"

namespace qphase {

double FockState1::mean_n() const {
  double acc = 0.0;
  for (int n = 0; n < c.size(); ++n) acc += n * std::norm(c[n]);
  return acc;
}

double FockState2::norm2() const {
  double acc = 0.0;
  for (const auto& t : terms) acc += std::norm(t.amp);
  return acc;
}

double FockState2::mean_n1() const {
  double acc = 0.0;
  for (const auto& t : terms) acc += t.n1 * std::norm(t.amp);
  return acc;
}

double FockState2::mean_n2() const {
  double acc = 0.0;
  for (const auto& t : terms) acc += t.n2 * std::norm(t.amp);
  return acc;
}

namespace states {

namespace {

// Finalize a truncated amplitude vector whose untruncated norm is
// `exact_norm2`: record the tail, enforce the tolerance, renormalize.
FockState1 finalize(Eigen::VectorXcd c, double exact_norm2, double vartheta0,
                    double eps, const char* what) {
  const double kept = c.squaredNorm();
  const double tail = 1.0 - kept / exact_norm2;
  if (!(tail < eps))
    throw TruncationError(std::string(what) + ": tail mass " + std::to_string(tail) +
                          " exceeds tolerance; increase N");
  c /= std::sqrt(kept);
  FockState1 st;
  st.c = std::move(c);
  st.tail_mass = tail;
  st.vartheta0 = vartheta0;
  return st;
}

}  // namespace

int default_truncation(double nbar) {
  return int(std::ceil(nbar + 10.0 * std::sqrt(nbar + 1.0)));
}

int squeezed_truncation(Complex alpha0, double r, double eps) {
  const double t2 = std::tanh(r) * std::tanh(r);
  int K = 50;
  if (t2 > 0.0) {
    for (int it = 0; it < 4; ++it) {
      const double rhs = eps * (1.0 - t2) * std::sqrt(kPi * K) * std::cosh(r);
      K = std::max(K, int(std::ceil(std::log(rhs) / std::log(t2))));
    }
  }
  const double nbar = std::norm(alpha0) + std::sinh(r) * std::sinh(r);
  return default_truncation(nbar) + 2 * K + 2;
}

FockState1 fock(int n, int N) {
  if (n < 0 || n > N) throw std::invalid_argument("fock: need 0 <= n <= N");
  FockState1 st;
  st.c = Eigen::VectorXcd::Zero(N + 1);
  st.c[n] = 1.0;
  return st;
}

FockState1 coherent(Complex alpha0, int N, double eps) {
  Eigen::VectorXcd c(N + 1);
  c[0] = std::exp(-0.5 * std::norm(alpha0));
  for (int n = 0; n < N; ++n) c[n + 1] = c[n] * alpha0 / std::sqrt(double(n + 1));
  return finalize(std::move(c), 1.0, std::arg(alpha0), eps, "coherent");
}

FockState1 squeezed(Complex alpha0, double r, double eta, int N, double eps) {
  if (r < 0.0) throw std::invalid_argument("squeezed: r must be >= 0");
  const Complex w = std::polar(std::tanh(r), 2.0 * eta);
  const Complex v = 0.5 * w;
  const Complex u = 0.5 * (alpha0 + std::conj(alpha0) * w);
  Eigen::VectorXcd c(N + 1);
  c[0] = std::exp(-0.5 * (std::norm(alpha0) + std::conj(alpha0) * std::conj(alpha0) * w)) /
         std::sqrt(std::cosh(r));
  if (N >= 1) c[1] = 2.0 * u * c[0];
  for (int n = 1; n < N; ++n)
    c[n + 1] = (2.0 * u * c[n] - 2.0 * std::sqrt(double(n)) * v * c[n - 1]) /
               std::sqrt(double(n + 1));
  return finalize(std::move(c), 1.0, std::arg(alpha0), eps, "squeezed");
}

FockState1 displaced_number(Complex alpha0, int n0, int N, double eps) {
  if (n0 < 0) throw std::invalid_argument("displaced_number: n0 must be >= 0");
  if (n0 > N) throw std::invalid_argument("displaced_number: need n0 <= N");
  const double a = std::abs(alpha0);
  const double vartheta0 = std::arg(alpha0);
  const double x = a * a;
  Eigen::VectorXcd c(N + 1);
  for (int n = 0; n <= N; ++n) {
    const int nm = std::min(n, n0), np = std::max(n, n0);
    double lb = -0.5 * x + 0.5 * (specfun::lfact(nm) - specfun::lfact(np)) +
                (np - nm) * std::log(a > 0.0 ? a : 1.0);
    double bn = (a == 0.0 && np != nm)
                    ? 0.0
                    : std::exp(lb) * specfun::laguerre_assoc(nm, double(np - nm), x);
    if ((np - n) % 2 != 0) bn = -bn;
    c[n] = bn * std::polar(1.0, (n - n0) * vartheta0);
  }
  return finalize(std::move(c), 1.0, vartheta0, eps, "displaced_number");
}

FockState1 kitten(Complex alpha0, const std::vector<double>& phis,
                  const std::vector<Complex>& cs, int N, double eps) {
  if (phis.empty() || phis.size() != cs.size())
    throw std::invalid_argument("kitten: need matching nonempty phase/coefficient lists");
  const int K = int(phis.size());
  // exact norm from coherent-state overlaps <a e^{i phi_k}|a e^{i phi_l}>
  double exact = 0.0;
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < K; ++l) {
      const Complex ak = alpha0 * std::polar(1.0, phis[k]);
      const Complex al = alpha0 * std::polar(1.0, phis[l]);
      const Complex ov = std::exp(std::conj(ak) * al -
                                  0.5 * (std::norm(ak) + std::norm(al)));
      exact += (std::conj(cs[k]) * cs[l] * ov).real();
    }
  if (exact < 1e-14)
    throw std::invalid_argument("kitten: superposition components cancel (zero norm)");
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N + 1);
  Eigen::VectorXcd base(N + 1);
  base[0] = std::exp(-0.5 * std::norm(alpha0));
  for (int n = 0; n < N; ++n) base[n + 1] = base[n] * alpha0 / std::sqrt(double(n + 1));
  for (int k = 0; k < K; ++k) {
    Complex rot = 1.0;
    const Complex step = std::polar(1.0, phis[k]);
    for (int n = 0; n <= N; ++n) {
      c[n] += cs[k] * base[n] * rot;
      rot *= step;
    }
  }
  return finalize(std::move(c), exact, std::arg(alpha0), eps, "kitten");
}

FockState1 cat(Complex alpha, double gamma, int N, double eps) {
  return kitten(alpha, {0.0, kPi}, {1.0, std::polar(1.0, gamma)}, N, eps);
}

FockState2 two_mode_squeezed_vacuum(double r, double phi, int N, double eps) {
  if (r < 0.0) throw std::invalid_argument("two_mode_squeezed_vacuum: r must be >= 0");
  const Complex q = std::polar(std::tanh(r), 2.0 * phi);
  FockState2 st;
  st.N1 = st.N2 = N;
  st.terms.reserve(N + 1);
  Complex amp = 1.0 / std::cosh(r);
  double kept = 0.0;
  for (int n = 0; n <= N; ++n) {
    st.terms.push_back({n, n, amp});
    kept += std::norm(amp);
    amp *= q;
  }
  st.tail_mass = 1.0 - kept;
  if (!(st.tail_mass < eps))
    throw TruncationError("two_mode_squeezed_vacuum: tail exceeds tolerance");
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& t : st.terms) t.amp *= scale;
  return st;
}

FockState2 pair_coherent(Complex zeta, int q, int N, double eps) {
  if (q < 0) throw std::invalid_argument("pair_coherent: q must be >= 0");
  // normalization by direct sum of |zeta|^{2n}/(n!(n+q)!), scaled by q!
  const double z2 = std::norm(zeta);
  double term = 1.0, norm_scaled = 0.0;  // sum of q! |zeta|^{2n}/(n!(n+q)!)
  for (int n = 0;; ++n) {
    norm_scaled += term;
    if (n >= N && term < 1e-30 * norm_scaled) break;
    if (n > N + 1000) break;
    term *= z2 / (double(n + 1) * double(n + q + 1));
  }
  FockState2 st;
  st.N1 = N + q;
  st.N2 = N;
  st.terms.reserve(N + 1);
  // amp_n = N_q zeta^n / sqrt(n!(n+q)!); build relative to amp_0 = N_q/sqrt(q!)
  Complex amp = 1.0;  // sqrt(q!) zeta^n / sqrt(n!(n+q)!)
  double kept_scaled = 0.0;
  for (int n = 0; n <= N; ++n) {
    st.terms.push_back({n + q, n, amp});
    kept_scaled += std::norm(amp);
    amp *= zeta / std::sqrt(double(n + 1) * double(n + q + 1));
  }
  st.tail_mass = 1.0 - kept_scaled / norm_scaled;
  if (!(st.tail_mass < eps))
    throw TruncationError("pair_coherent: tail exceeds tolerance");
  const double scale = 1.0 / std::sqrt(kept_scaled);
  for (auto& t : st.terms) t.amp *= scale;
  return st;
}

FiniteDimState fd_coherent_truncated(Complex alpha_bar, int sigma) {
  if (sigma < 0) throw std::invalid_argument("fd_coherent_truncated: sigma must be >= 0");
  const double x = std::norm(alpha_bar);
  const double lag = specfun::laguerre_assoc(sigma, -double(sigma) - 1.0, x);
  const double nrm2 = (sigma % 2 == 0 ? lag : -lag);  // (-1)^sigma L_sigma^{-sigma-1}
  FiniteDimState st;
  st.c.resize(sigma + 1);
  st.c[0] = 1.0;
  for (int n = 0; n < sigma; ++n) st.c[n + 1] = st.c[n] * alpha_bar / std::sqrt(double(n + 1));
  st.c /= std::sqrt(nrm2);
  return st;
}

FiniteDimState fd_coherent_displacement(Complex alpha, int sigma) {
  if (sigma < 0) throw std::invalid_argument("fd_coherent_displacement: sigma must be >= 0");
  const int d = sigma + 1;
  // generator G = alpha a+ - alpha* a on the truncated space; iG is Hermitian
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(d, d);
  const Complex I(0.0, 1.0);
  for (int n = 0; n < sigma; ++n) {
    const double s = std::sqrt(double(n + 1));
    h(n + 1, n) = I * alpha * s;          // i * alpha a+
    h(n, n + 1) = -I * std::conj(alpha) * s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(d);
  for (int k = 0; k < d; ++k) phases[k] = std::polar(1.0, -es.eigenvalues()[k]);
  FiniteDimState st;
  st.c = es.eigenvectors() * phases.asDiagonal() *
         es.eigenvectors().adjoint().col(0);
  st.c /= st.c.norm();
  return st;
}

FiniteDimState fd_coherent_displacement_hermite(Complex alpha, int sigma) {
  const int d = sigma + 1;
  // roots of He_{sigma+1} = eigenvalues of the Jacobi matrix with offdiag sqrt(k)
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(d, d);
  for (int k = 1; k <= sigma; ++k) jac(k, k - 1) = jac(k - 1, k) = std::sqrt(double(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  const Eigen::VectorXd roots = es.eigenvalues();
  auto he = [](int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return p0;
    for (int k = 1; k < n; ++k) {
      const double p2 = x * p1 - k * p0;
      p0 = p1;
      p1 = p2;
    }
    return p1;
  };
  const double a = std::abs(alpha);
  const double theta = std::arg(alpha);
  FiniteDimState st;
  st.c.resize(d);
  for (int n = 0; n <= sigma; ++n) {
    Complex acc = 0.0;
    for (int k = 0; k < d; ++k) {
      const double hs = he(sigma, roots[k]);
      acc += std::polar(1.0, roots[k] * a) * he(n, roots[k]) / (hs * hs);
    }
    st.c[n] = std::polar(1.0, n * (theta - kPi / 2.0)) *
              std::exp(-0.5 * specfun::lfact(n)) * acc;
  }
  // n-independent prefactors are absorbed by the normalization
  st.c /= st.c.norm();
  return st;
}

Complex overlap(const FockState1& a, const FockState1& b) {
  const int n = int(std::min(a.c.size(), b.c.size()));
  return a.c.head(n).dot(b.c.head(n));  // conjugates the left argument
}

Complex overlap(const FiniteDimState& a, const FiniteDimState& b) {
  const int n = int(std::min(a.c.size(), b.c.size()));
  return a.c.head(n).dot(b.c.head(n));
}

Complex overlap_glauber(const FiniteDimState& a, Complex alpha) {
  Complex amp = std::exp(-0.5 * std::norm(alpha));
  Complex acc = 0.0;
  for (int n = 0; n <= a.sigma(); ++n) {
    acc += std::conj(a.c[n]) * amp;
    amp *= alpha / std::sqrt(double(n + 1));
  }
  return acc;
}

}  // namespace states
}  // namespace qphase
