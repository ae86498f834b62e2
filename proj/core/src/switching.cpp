#include "mpa/switching.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mpa/error.hpp"
#include "special.hpp"

namespace mpa {

using detail::arcoth;
using detail::arsinh;
using detail::artanh;

namespace {

// lambda0 within this relative distance of the fished stable intercept uses
// the logarithmic branch.
constexpr double kInterceptBand = 1e-12;

// (b1/a1 - 1) / (b1/a1): value of cosh(y) - r sinh(y) on the switching line.
double switch_level(const DerivedConstants& dc) {
  const double ratio = dc.fished_weight / dc.fished_stiffness;
  return (ratio - 1.0) / ratio;
}

double entry_lambda1(double lambda0, const DerivedConstants& dc) {
  const double g = dc.grazing_lambda0;
  return std::sqrt(std::max(0.0, (lambda0 - g) * (lambda0 + g)));
}

double reserve_leg(double lambda0, const DerivedConstants& dc) {
  return artanh(entry_lambda1(lambda0, dc) / dc.reserve_switch_intercept) /
         std::sqrt(dc.reserve_stiffness);
}

double fished_leg(HitBranch branch, double lambda0,
                  const DerivedConstants& dc) {
  const double root_a = std::sqrt(dc.fished_stiffness);
  const double r = lambda0 / dc.fished_stable_intercept;
  const double c = switch_level(dc);
  switch (branch) {
    case HitBranch::kBeforeGrazing:
      return artanh(r) / root_a;
    case HitBranch::kBelowIntercept: {
      // arcosh(z) with z^2 - 1 formed from the entry point, so the grazing
      // end (z -> 1) keeps full relative accuracy.
      const double s = std::sqrt((1.0 - r) * (1.0 + r));
      const double z = c / s;
      const double zm1 = root_a * dc.length * entry_lambda1(lambda0, dc) /
                         (dc.fished_weight * s);
      return (artanh(r) - std::log(z + zm1)) / root_a;
    }
    case HitBranch::kAtIntercept:
      return -std::log(c) / root_a;
    case HitBranch::kAboveIntercept:
      return (arcoth(r) - arsinh(c / std::sqrt((r - 1.0) * (r + 1.0)))) /
             root_a;
    case HitBranch::kEscapes:
      break;
  }
  throw DomainError("fished_leg: escaping trajectories have no fished leg");
}

void require_positive_lambda(double lambda0, const char* op) {
  if (!(lambda0 > 0.0)) {
    throw DomainError(std::string(op) + ": lambda0 must be > 0");
  }
}

void require_switching(double lambda0, const DerivedConstants& dc,
                       const char* op) {
  if (!(lambda0 >= dc.grazing_lambda0)) {
    throw DomainError(std::string(op) +
                      ": lambda0 below the grazing value " +
                      std::to_string(dc.grazing_lambda0));
  }
}

HitBranch switching_branch(double lambda0, const DerivedConstants& dc) {
  const double i1 = dc.fished_stable_intercept;
  if (std::abs(lambda0 - i1) <= kInterceptBand * i1) {
    return HitBranch::kAtIntercept;
  }
  return lambda0 < i1 ? HitBranch::kBelowIntercept : HitBranch::kAboveIntercept;
}

}  // namespace

DerivedConstants derive_constants(const ScaledParams& sp) {
  const double q = sp.density_weight();
  if (!(q > 1.0)) {
    throw DomainError("derive_constants: requires q > 1, got " +
                      std::to_string(q));
  }
  const double l = sp.length();
  const double hbar = sp.max_harvest();
  DerivedConstants dc{};
  dc.length = l;
  dc.fished_stiffness = hbar + 1.0;
  dc.fished_weight = hbar + q;
  dc.reserve_stiffness = 1.0;
  dc.reserve_weight = q;

  const double a1 = dc.fished_stiffness;
  const double b1 = dc.fished_weight;
  const double a2 = dc.reserve_stiffness;
  const double b2 = dc.reserve_weight;
  dc.fished_stable_intercept = b1 / (std::sqrt(a1) * l);
  dc.reserve_stable_intercept = b2 / (std::sqrt(a2) * l);
  dc.fished_equilibrium = -b1 / (a1 * l);
  dc.reserve_equilibrium = -b2 / (a2 * l);
  dc.fished_switch_intercept = std::sqrt(a1) / l * (b1 / a1 - 1.0);
  dc.reserve_switch_intercept = std::sqrt(a2) / l * (b2 / a2 - 1.0);
  dc.grazing_lambda0 = std::sqrt(2.0 * b1 - a1) / l;
  dc.escape_lambda0 = std::hypot(dc.grazing_lambda0, dc.reserve_switch_intercept);
  dc.min_length = min_length(sp);
  return dc;
}

SaddleGeometry saddle_geometry(double a, double b, double length) {
  if (!(a > 0.0) || !(b > 0.0) || !(length > 0.0)) {
    throw DomainError("saddle_geometry: requires a, b, l > 0");
  }
  const double slope = 1.0 / std::sqrt(a);
  return {0.0, -b / (a * length), slope, -slope};
}

HitBranch axis_hit_branch(double lambda0, const DerivedConstants& dc) {
  require_positive_lambda(lambda0, "axis_hit_branch");
  if (lambda0 < dc.grazing_lambda0) return HitBranch::kBeforeGrazing;
  if (lambda0 >= dc.escape_lambda0) return HitBranch::kEscapes;
  return switching_branch(lambda0, dc);
}

double axis_hit_time_branch(HitBranch branch, double lambda0,
                            const DerivedConstants& dc) {
  if (branch == HitBranch::kEscapes) {
    return std::numeric_limits<double>::infinity();
  }
  const double fished = fished_leg(branch, lambda0, dc);
  if (branch == HitBranch::kBeforeGrazing) return fished;
  return fished + reserve_leg(lambda0, dc);
}

HitTime axis_hit_time(double lambda0, const DerivedConstants& dc) {
  const HitBranch branch = axis_hit_branch(lambda0, dc);
  if (branch == HitBranch::kEscapes) return HitTime::never();
  return HitTime::at(axis_hit_time_branch(branch, lambda0, dc));
}

double switch_time(double lambda0, const DerivedConstants& dc) {
  require_switching(lambda0, dc, "switch_time");
  return fished_leg(switching_branch(lambda0, dc), lambda0, dc);
}

double switch_line_lambda1(double lambda0, const DerivedConstants& dc) {
  require_switching(lambda0, dc, "switch_line_lambda1");
  return entry_lambda1(lambda0, dc);
}

HitTime post_switch_time(double entry, const DerivedConstants& dc) {
  const double is2 = dc.reserve_switch_intercept;
  if (!(entry > 0.0) || !(entry <= is2)) {
    throw DomainError("post_switch_time: entry must lie in (0, " +
                      std::to_string(is2) + "]");
  }
  if (entry == is2) return HitTime::never();
  return HitTime::at(artanh(entry / is2) / std::sqrt(dc.reserve_stiffness));
}

double min_length(const ScaledParams& sp) {
  const double q = sp.density_weight();
  if (!(q > 1.0)) {
    throw DomainError("min_length: undefined for q <= 1, got q = " +
                      std::to_string(q));
  }
  const double hbar = sp.max_harvest();
  const double a1 = hbar + 1.0;
  return 2.0 / std::sqrt(a1) *
         artanh(std::sqrt(a1 * (hbar + 2.0 * q - 1.0)) / (hbar + q));
}

double solve_boundary_lambda(const DerivedConstants& dc) {
  const double target = 0.5 * dc.length;
  const auto below_target = [&](double lambda0) {
    return axis_hit_time(lambda0, dc).value_or(
               std::numeric_limits<double>::infinity()) < target;
  };

  // The hitting time increases continuously from 0 to +inf on
  // (0, escape_lambda0), so plain bisection is safe.
  double lo = 0.0;
  double hi = dc.escape_lambda0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (below_target(mid) ? lo : hi) = mid;
  }
  double best = 0.5 * (lo + hi);
  if (!(best > 0.0)) best = hi;
  const auto residual = [&](double lambda0) {
    return axis_hit_time(lambda0, dc).value_or(
               std::numeric_limits<double>::infinity()) - target;
  };

  // Newton polish with a central-difference slope.
  double best_res = residual(best);
  for (int it = 0; it < 3 && std::isfinite(best_res) && best_res != 0.0;
       ++it) {
    const double h = 1e-7 * best;
    if (best - h <= 0.0 || best + h >= dc.escape_lambda0) break;
    const double slope = (residual(best + h) - residual(best - h)) / (2.0 * h);
    if (!(slope > 0.0)) break;
    const double next = best - best_res / slope;
    if (!(next > 0.0 && next < dc.escape_lambda0)) break;
    const double next_res = residual(next);
    if (!(std::abs(next_res) < std::abs(best_res))) break;
    best = next;
    best_res = next_res;
  }
  if (!std::isfinite(best_res)) {
    throw NumericalDefect("solve_boundary_lambda: no finite root located");
  }
  return best;
}

double reserve_edge_distance(const ScaledParams& sp) {
  const DerivedConstants dc = derive_constants(sp);
  if (!(sp.length() > dc.min_length)) {
    throw DomainError("reserve_edge_distance: requires l > l_min = " +
                      std::to_string(dc.min_length));
  }
  return switch_time(solve_boundary_lambda(dc), dc);
}

double monotonicity_witness(double lambda0, const DerivedConstants& dc) {
  require_switching(lambda0, dc, "monotonicity_witness");
  const double a1 = dc.fished_stiffness;
  const double b1 = dc.fished_weight;
  const double a2 = dc.reserve_stiffness;
  const double b2 = dc.reserve_weight;
  const double e = dc.escape_lambda0;
  const double entry = entry_lambda1(lambda0, dc);
  return -(2.0 * b1 - a1) / a1 * (e - lambda0) * (e + lambda0) +
         (b2 / a2 - 1.0) * lambda0 *
             (b1 / a1 * entry + (b1 / a1 - 1.0) * lambda0);
}

}  // namespace mpa
