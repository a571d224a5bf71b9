#ifndef QPHASE_GRIDS_HPP
#define QPHASE_GRIDS_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <utility>

namespace qphase {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

enum class Formalism { PeggBarnett, SParam, GarrisonWong };

// Phase distribution sampled at the midpoints of a uniform grid over the
// window [theta0, theta0 + 2pi).  Midpoint sampling keeps periodic sums
// spectrally accurate and stays away from the Garrison-Wong endpoint
// singularities.
struct PhaseDistribution {
  double theta0 = -kPi;
  Eigen::VectorXd values;
  Formalism formalism = Formalism::PeggBarnett;
  double s = 0.0;          // meaningful for Formalism::SParam
  bool converged = true;   // partial-sum monitor for s in (0,1)

  int size() const { return int(values.size()); }
  double step() const { return kTwoPi / size(); }
  double theta(int j) const { return theta0 + (j + 0.5) * step(); }

  double integral() const { return values.sum() * step(); }
  // moments of theta over the window by midpoint quadrature
  std::pair<double, double> mean_variance() const;
};

// Per spec naming: mean and variance of the phase over the window.
inline std::pair<double, double> pb_mean_variance(const PhaseDistribution& d) {
  return d.mean_variance();
}

// Quasidistribution W^{(s)}(alpha) on a polar grid: theta rays at window
// midpoints, composite Gauss-Legendre nodes along the radius.
struct QuasiDistGrid {
  double theta0 = -kPi;
  double s = 0.0;
  Eigen::VectorXd radii;     // quadrature nodes on [0, rmax]
  Eigen::VectorXd rweights;  // matching weights (plain dr measure)
  Eigen::MatrixXd w;         // n_theta x n_r samples of W
  bool resolution_warning = false;

  int n_theta() const { return int(w.rows()); }
  double theta(int j) const { return theta0 + (j + 0.5) * kTwoPi / n_theta(); }
  double rmax() const { return radii.size() ? radii[radii.size() - 1] : 0.0; }
  // integral of W over the plane (d^2 alpha = r dr dtheta)
  double integral() const;
};

// Radial quadrature rule shared by quasidistribution grids.
struct RadialRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};
RadialRule radial_rule(double rmax, double panel_width = 0.25);

enum class JointAxes { ModePhases, SumDiff };
enum class CastTag { Raw4Pi, Cast2Pi };

// Joint phase distribution.
//  - ModePhases: values(i, j) = P(theta_a_i, theta_b_j) on K x K midpoints of
//    [theta0a, theta0a+2pi) x [theta0b, theta0b+2pi).
//  - SumDiff/Raw4Pi: values(i, j) = P_4pi(theta+_i, theta-_j) (1/2 Jacobian
//    included) on 2K x 2K midpoints of [theta0p, theta0p+4pi) x
//    [theta0m-2pi, theta0m+2pi); mask selects the fundamental diamond.
//  - SumDiff/Cast2Pi: K x K midpoints of [theta0p+pi, theta0p+3pi) x
//    [theta0m-pi, theta0m+pi).
struct JointPhaseDistribution {
  JointAxes axes = JointAxes::ModePhases;
  CastTag cast = CastTag::Raw4Pi;
  double theta0a = -kPi, theta0b = -kPi;  // single-mode window starts
  double theta0p = 0.0, theta0m = 0.0;    // sum/difference window centers - pi
  Eigen::MatrixXd values;
  Eigen::Matrix<uint8_t, Eigen::Dynamic, Eigen::Dynamic> mask;  // Raw4Pi only
  bool resolution_warning = false;

  double step() const;
  double xcoord(int i) const;  // theta_a or theta_+
  double ycoord(int j) const;  // theta_b or theta_-
  double integral() const;
};

// Deterministic parallel loop over [0, n); worker count is capped by the
// PHASE_THREADS environment variable (default: hardware concurrency).
void parallel_for(int n, const std::function<void(int)>& fn);
int thread_budget();

}  // namespace qphase

#endif
