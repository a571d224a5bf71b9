#include "qphase/grids.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qphase {

std::pair<double, double> PhaseDistribution::mean_variance() const {
  const double h = step();
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (int j = 0; j < size(); ++j) {
    const double th = theta(j), p = values[j];
    m0 += p;
    m1 += th * p;
    m2 += th * th * p;
  }
  m0 *= h;
  m1 *= h;
  m2 *= h;
  const double mean = m1 / m0;
  return {mean, m2 / m0 - mean * mean};
}

namespace {

// 16-point Gauss-Legendre rule on [-1, 1]
constexpr std::array<double, 8> kGLx = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr std::array<double, 8> kGLw = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

}  // namespace

RadialRule radial_rule(double rmax, double panel_width) {
  if (!(rmax > 0.0)) throw std::invalid_argument("radial_rule: rmax must be positive");
  const int panels = std::max(1, int(std::ceil(rmax / panel_width)));
  const double w = rmax / panels;
  RadialRule rule;
  rule.nodes.resize(panels * 16);
  rule.weights.resize(panels * 16);
  int k = 0;
  for (int p = 0; p < panels; ++p) {
    const double c = (p + 0.5) * w, hw = 0.5 * w;
    for (int i = 7; i >= 0; --i) {  // ascending node order inside the panel
      rule.nodes[k] = c - hw * kGLx[i];
      rule.weights[k] = hw * kGLw[i];
      ++k;
    }
    for (int i = 0; i < 8; ++i) {
      rule.nodes[k] = c + hw * kGLx[i];
      rule.weights[k] = hw * kGLw[i];
      ++k;
    }
  }
  return rule;
}

double QuasiDistGrid::integral() const {
  const double dtheta = kTwoPi / n_theta();
  double acc = 0.0;
  for (int j = 0; j < n_theta(); ++j) {
    double ray = 0.0;
    for (int k = 0; k < radii.size(); ++k) ray += rweights[k] * radii[k] * w(j, k);
    acc += ray;
  }
  return acc * dtheta;
}

double JointPhaseDistribution::step() const {
  const int rows = int(values.rows());
  return (cast == CastTag::Raw4Pi && axes == JointAxes::SumDiff) ? 2.0 * kTwoPi / rows
                                                                 : kTwoPi / rows;
}

double JointPhaseDistribution::xcoord(int i) const {
  const double h = step();
  if (axes == JointAxes::ModePhases) return theta0a + (i + 0.5) * h;
  if (cast == CastTag::Raw4Pi) return theta0p + (i + 0.5) * h;
  return theta0p + kPi + (i + 0.5) * h;
}

double JointPhaseDistribution::ycoord(int j) const {
  const double h = step();
  if (axes == JointAxes::ModePhases) return theta0b + (j + 0.5) * h;
  if (cast == CastTag::Raw4Pi) return theta0m - kTwoPi + (j + 0.5) * h;
  return theta0m - kPi + (j + 0.5) * h;
}

double JointPhaseDistribution::integral() const {
  const double h = step();
  double acc = 0.0;
  if (cast == CastTag::Raw4Pi && axes == JointAxes::SumDiff) {
    for (int i = 0; i < values.rows(); ++i)
      for (int j = 0; j < values.cols(); ++j)
        if (mask(i, j)) acc += values(i, j);
  } else {
    acc = values.sum();
  }
  return acc * h * h;
}

int thread_budget() {
  static int budget = [] {
    int n = int(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("PHASE_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0) n = std::min(n, cap);
    }
    return n;
  }();
  return budget;
}

void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_budget(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([=, &fn] {
      for (int i = t; i < n; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qphase
