#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include "mpa/error.hpp"
#include "mpa/verification.hpp"

namespace mpa {

namespace {

using State = std::array<double, 2>;  // (lambda1, lambda2)

struct Field {
  double a;
  double b;
  double l;
  State operator()(const State& y) const {
    return {-a * y[1] - b / l, -y[0]};
  }
};

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
  State out = y;
  for (const auto& [c, k] : terms) {
    out[0] += h * c * (*k)[0];
    out[1] += h * c * (*k)[1];
  }
  return out;
}

struct StepResult {
  State y;
  State err;
};

// One Dormand-Prince 5(4) step.
StepResult dp_step(const Field& f, const State& y, double h) {
  const State k1 = f(y);
  const State k2 = f(axpy(y, h, {{1.0 / 5, &k1}}));
  const State k3 = f(axpy(y, h, {{3.0 / 40, &k1}, {9.0 / 40, &k2}}));
  const State k4 = f(axpy(y, h, {{44.0 / 45, &k1}, {-56.0 / 15, &k2},
                                 {32.0 / 9, &k3}}));
  const State k5 = f(axpy(y, h, {{19372.0 / 6561, &k1}, {-25360.0 / 2187, &k2},
                                 {64448.0 / 6561, &k3}, {-212.0 / 729, &k4}}));
  const State k6 = f(axpy(y, h, {{9017.0 / 3168, &k1}, {-355.0 / 33, &k2},
                                 {46732.0 / 5247, &k3}, {49.0 / 176, &k4},
                                 {-5103.0 / 18656, &k5}}));
  const State y5 = axpy(y, h, {{35.0 / 384, &k1}, {500.0 / 1113, &k3},
                               {125.0 / 192, &k4}, {-2187.0 / 6784, &k5},
                               {11.0 / 84, &k6}});
  const State k7 = f(y5);
  const State err = axpy(State{0.0, 0.0}, h,
                         {{71.0 / 57600, &k1}, {-71.0 / 16695, &k3},
                          {71.0 / 1920, &k4}, {-17253.0 / 339200, &k5},
                          {22.0 / 525, &k6}, {-1.0 / 40, &k7}});
  return {y5, err};
}

// Fraction theta in (0, 1] of the step h at which g changes sign, found by
// bisection over single sub-steps from y.
template <class G>
double locate(const Field& f, const State& y, double h, G g, double precision) {
  const bool start_sign = g(y) > 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while ((hi - lo) * h > precision) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const bool sign = g(dp_step(f, y, mid * h).y) > 0.0;
    (sign == start_sign ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace

EventResult integrate_adjoint_with_events(double lambda0,
                                          const ScaledParams& sp,
                                          const EventOptions& options) {
  if (!(lambda0 > 0.0)) {
    throw DomainError("integrate_adjoint_with_events: lambda0 must be > 0");
  }
  const double q = sp.density_weight();
  if (!(q > 1.0)) {
    throw DomainError("integrate_adjoint_with_events: requires q > 1");
  }
  const double l = sp.length();
  const double hbar = sp.max_harvest();
  const Field fished{hbar + 1.0, hbar + q, l};
  const Field reserve{1.0, q, l};
  const double line = -1.0 / l;
  const double horizon = options.horizon_factor * l;
  const double tol = options.tolerance;

  const auto switching = [&](const State& s) { return s[1] - line; };
  const auto axis = [](const State& s) { return s[0]; };

  State y{lambda0, 0.0};
  double x = 0.0;
  bool in_reserve = false;
  int crossings = 0;
  double h = 1e-3 / std::sqrt(hbar + 1.0);

  while (x < horizon) {
    const Field& f = in_reserve ? reserve : fished;
    h = std::min(h, horizon - x);
    const StepResult step = dp_step(f, y, h);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double scale =
          tol + tol * std::max(std::abs(y[i]), std::abs(step.y[i]));
      err = std::max(err, std::abs(step.err[i]) / scale);
    }
    if (!std::isfinite(err)) {
      throw NumericalDefect("integrate_adjoint_with_events: non-finite step");
    }
    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      continue;
    }

    const bool hits_axis = axis(step.y) <= 0.0;
    const bool crosses = (switching(y) > 0.0) != (switching(step.y) > 0.0);
    if (hits_axis || crosses) {
      const double t_axis =
          hits_axis ? locate(f, y, h, axis, options.event_precision) : 2.0;
      const double t_cross =
          crosses ? locate(f, y, h, switching, options.event_precision) : 2.0;
      if (t_axis <= t_cross) {
        const State end = dp_step(f, y, t_axis * h).y;
        return {HitTime::at(x + t_axis * h), crossings, end[1]};
      }
      // Restart from just past the crossing with the other field.
      y = dp_step(f, y, t_cross * h).y;
      x += t_cross * h;
      in_reserve = !in_reserve;
      ++crossings;
      continue;
    }

    y = step.y;
    x += h;
    const double grow = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, grow));
  }
  return {HitTime::never(), crossings, y[1]};
}

}  // namespace mpa
