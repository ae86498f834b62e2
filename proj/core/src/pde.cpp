#include <algorithm>
#include <cmath>
#include <vector>

#include "mpa/bvp.hpp"
#include "mpa/error.hpp"
#include "mpa/verification.hpp"

namespace mpa {

namespace {

std::vector<double> build_nodes(const HarvestPolicy& policy, double dx) {
  const auto& b = policy.breakpoints();
  std::vector<double> nodes{b.front()};
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    const double span = b[i + 1] - b[i];
    const int cells = std::max(1, static_cast<int>(std::ceil(span / dx)));
    for (int c = 1; c < cells; ++c) nodes.push_back(b[i] + span * c / cells);
    nodes.push_back(b[i + 1]);
  }
  return nodes;
}

double l2_distance(const std::vector<double>& x, const std::vector<double>& a,
                   const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double e0 = a[i] - b[i];
    const double e1 = a[i + 1] - b[i + 1];
    sum += 0.5 * (e0 * e0 + e1 * e1) * (x[i + 1] - x[i]);
  }
  return std::sqrt(sum);
}

}  // namespace

PdeResult pde_time_stepper(const HarvestPolicy& policy,
                           const PdeOptions& options) {
  const double l = policy.length();
  const double dx = options.dx > 0.0 ? options.dx : l / 4096.0;
  const double dt_target = options.dt > 0.0 ? options.dt : l / 512.0;
  if (!(options.t_max > 0.0) || !(options.record_every > 0.0)) {
    throw DomainError("pde_time_stepper: t_max and record_every must be > 0");
  }

  const std::vector<double> x = build_nodes(policy, dx);
  const std::size_t n = x.size();
  const StateProfile steady = shoot_steady_state(policy);
  std::vector<double> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = steady.u(x[i]);

  const long steps = std::max(1L, static_cast<long>(std::ceil(options.t_max / dt_target)));
  const double dt = options.t_max / static_cast<double>(steps);

  // Tridiagonal system for interior nodes 1..n-2, factored once.
  const std::size_t m = n - 2;
  std::vector<double> lower(m), diag(m), upper(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t j = k + 1;
    const double hl = x[j] - x[j - 1];
    const double hr = x[j + 1] - x[j];
    const double rl = policy.rate_at(0.5 * (x[j - 1] + x[j]));
    const double rr = policy.rate_at(0.5 * (x[j] + x[j + 1]));
    const double alpha = 2.0 / (hl * (hl + hr));
    const double beta = 2.0 / (hr * (hl + hr));
    const double reaction = 1.0 + (hl * rl + hr * rr) / (hl + hr);
    lower[k] = -dt * alpha;
    upper[k] = -dt * beta;
    diag[k] = 1.0 + dt * (alpha + beta + reaction);
  }
  std::vector<double> pivot(m), factor(m);
  for (std::size_t k = 0; k < m; ++k) {
    factor[k] = k == 0 ? 0.0 : lower[k] / pivot[k - 1];
    pivot[k] = diag[k] - (k == 0 ? 0.0 : factor[k] * upper[k - 1]);
  }

  std::vector<double> u(n, 0.0);
  std::vector<double> rhs(m);
  PdeResult result;
  result.history.emplace_back(0.0, l2_distance(x, u, target));
  double next_record = options.record_every;

  for (long s = 1; s <= steps; ++s) {
    for (std::size_t k = 0; k < m; ++k) {
      rhs[k] = u[k + 1] + dt - (k == 0 ? 0.0 : factor[k] * rhs[k - 1]);
    }
    for (std::size_t k = m; k-- > 0;) {
      const double next = k + 1 < m ? u[k + 2] : 0.0;
      u[k + 1] = (rhs[k] - upper[k] * next) / pivot[k];
    }
    const double t = dt * static_cast<double>(s);
    if (!std::isfinite(u[n / 2])) {
      throw NumericalDefect("pde_time_stepper: solution is no longer finite");
    }
    if (t + 0.5 * dt >= next_record || s == steps) {
      result.history.emplace_back(t, l2_distance(x, u, target));
      while (next_record <= t + 0.5 * dt) next_record += options.record_every;
    }
  }

  result.distance = l2_distance(x, u, target);
  result.final_state.reserve(n);
  for (std::size_t i = 0; i < n; ++i) result.final_state.push_back({x[i], u[i]});
  return result;
}

}  // namespace mpa
