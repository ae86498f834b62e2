#include "mpa/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "mpa/error.hpp"
#include "mpa/switching.hpp"
#include "special.hpp"

namespace mpa {

using detail::arcosh;
using detail::arcoth;
using detail::arsinh;
using detail::artanh;

OptimalSolution optimal_policy(const ScaledParams& sp) {
  const double l = sp.length();
  const double q = sp.density_weight();
  const double hbar = sp.max_harvest();

  std::optional<double> lmin;
  std::optional<double> lambda_bar;
  std::optional<double> edge;
  HarvestPolicy policy = HarvestPolicy::constant(l, hbar, hbar);
  double halfwidth = 0.0;

  if (q > 1.0) {
    const DerivedConstants dc = derive_constants(sp);
    lmin = dc.min_length;
    if (l > dc.min_length) {
      lambda_bar = solve_boundary_lambda(dc);
      edge = switch_time(*lambda_bar, dc);
      policy = HarvestPolicy::centered_reserve(l, hbar, *edge);
      halfwidth = std::max(0.0, 0.5 * l - *edge);
    }
  }

  const StateProfile state = shoot_steady_state(policy);
  const AdjointProfile adjoint = solve_adjoint(policy, q);
  const double objective = evaluate_objective(policy, state, q);
  Diagnostics diag = pontryagin_diagnostics(policy, q, state, adjoint);
  return {policy, halfwidth, objective, lambda_bar, edge, lmin, diag};
}

Diagnostics pontryagin_diagnostics(const HarvestPolicy& policy,
                                   double density_weight,
                                   const StateProfile& state,
                                   const AdjointProfile& adjoint,
                                   std::size_t samples,
                                   double switch_tolerance) {
  const double l = policy.length();
  const double line = -1.0 / l;
  Diagnostics d{};
  d.boundary_residual = state.boundary_residual();
  d.transversality = std::max(std::abs(adjoint.lambda2(adjoint.start())),
                              std::abs(adjoint.lambda2(adjoint.end())));
  d.hamiltonian_deviation =
      hamiltonian_deviation(state, adjoint, policy, density_weight, samples);

  const auto& b = policy.breakpoints();
  d.switch_mismatch = 0.0;
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    d.switch_mismatch =
        std::max(d.switch_mismatch, std::abs(adjoint.lambda2(b[i]) - line));
  }

  d.switching_law_holds = true;
  const double hbar = policy.max_harvest();
  for (const AdjointSample& s : adjoint.samples(samples)) {
    const double rate = policy.rate_at(s.x);
    const double gap = s.lambda2 - line;
    const bool ok = (rate == hbar && gap >= -switch_tolerance) ||
                    (rate == 0.0 && gap <= switch_tolerance);
    if (!ok) {
      d.switching_law_holds = false;
      break;
    }
  }
  return d;
}

namespace {

void require_reserve_regime(const UnscaledParams& p, const char* op) {
  if (!(p.density_weight() > p.death_rate())) {
    throw DomainError(std::string(op) + ": requires Q > mu");
  }
}

// sqrt(D / (Hbar + mu)): length unit of the fished dynamics.
double fished_scale(const UnscaledParams& p) {
  return std::sqrt(p.diffusion() / (p.max_harvest() + p.death_rate()));
}

// (Q - mu) / (Q + Hbar).
double switch_ratio(const UnscaledParams& p) {
  return (p.density_weight() - p.death_rate()) /
         (p.density_weight() + p.max_harvest());
}

enum class Side { kBelow, kAt, kAbove };

Side side_of_one(double lambda) {
  if (std::abs(lambda - 1.0) <= 1e-12) return Side::kAt;
  return lambda < 1.0 ? Side::kBelow : Side::kAbove;
}

// Physical distance from the coast end to the switch point.
double fished_distance(double lambda, const UnscaledParams& p) {
  const double c = switch_ratio(p);
  switch (side_of_one(lambda)) {
    case Side::kBelow:
      return fished_scale(p) *
             (artanh(lambda) -
              arcosh(c / std::sqrt((1.0 - lambda) * (1.0 + lambda))));
    case Side::kAt:
      return -fished_scale(p) * std::log(c);
    case Side::kAbove:
      return fished_scale(p) *
             (arcoth(lambda) -
              arsinh(c / std::sqrt((lambda - 1.0) * (lambda + 1.0))));
  }
  return 0.0;
}

}  // namespace

double unscaled_min_length(const UnscaledParams& p) {
  require_reserve_regime(p, "unscaled_min_length");
  const double hm = p.max_harvest() + p.death_rate();
  const double hq = p.max_harvest() + p.density_weight();
  const double hg = p.max_harvest() + 2.0 * p.density_weight() - p.death_rate();
  return 2.0 * fished_scale(p) * artanh(std::sqrt(hm * hg) / hq);
}

Interval reserve_boundary_domain(const UnscaledParams& p) {
  require_reserve_regime(p, "reserve_boundary_domain");
  const double hbar = p.max_harvest();
  const double mu = p.death_rate();
  const double Q = p.density_weight();
  return {std::sqrt((hbar + 2.0 * Q - mu) * (hbar + mu)) / (hbar + Q),
          std::sqrt((hbar + Q * Q / mu) * (hbar + mu)) / (hbar + Q)};
}

double reserve_boundary_function(double lambda, const UnscaledParams& p) {
  const Interval dom = reserve_boundary_domain(p);
  if (!(lambda > dom.lower && lambda < dom.upper)) {
    throw DomainError("reserve_boundary_function: lambda outside (" +
                      std::to_string(dom.lower) + ", " +
                      std::to_string(dom.upper) + ")");
  }
  const double hbar = p.max_harvest();
  const double mu = p.death_rate();
  const double Q = p.density_weight();
  const double gap = std::sqrt(
      std::max(0.0, (lambda - dom.lower) * (lambda + dom.lower)));
  const double reserve_leg = std::sqrt(p.diffusion() / mu) *
                             artanh((hbar + Q) / (Q - mu) *
                                    std::sqrt(mu / (hbar + mu)) * gap);
  return fished_distance(lambda, p) + reserve_leg;
}

std::optional<double> unscaled_reserve_boundary(const UnscaledParams& p) {
  if (!(p.density_weight() > p.death_rate())) return std::nullopt;
  const double L = p.length();
  if (!(L > unscaled_min_length(p))) return std::nullopt;

  const Interval dom = reserve_boundary_domain(p);
  const double target = 0.5 * L;
  const auto residual = [&](double lambda) {
    return reserve_boundary_function(lambda, p) - target;
  };

  double lo = dom.lower;
  double hi = dom.upper;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  double lambda = 0.5 * (lo + hi);
  if (!(lambda > dom.lower && lambda < dom.upper)) {
    throw NumericalDefect("unscaled_reserve_boundary: root left the domain");
  }
  double res = residual(lambda);
  for (int it = 0; it < 3 && res != 0.0; ++it) {
    const double h = 1e-7 * lambda;
    if (lambda - h <= dom.lower || lambda + h >= dom.upper) break;
    const double slope = (residual(lambda + h) - residual(lambda - h)) / (2.0 * h);
    if (!(slope > 0.0)) break;
    const double next = lambda - res / slope;
    if (!(next > dom.lower && next < dom.upper)) break;
    const double next_res = residual(next);
    if (!(std::abs(next_res) < std::abs(res))) break;
    lambda = next;
    res = next_res;
  }
  if (!std::isfinite(res)) {
    throw NumericalDefect("unscaled_reserve_boundary: inversion failed");
  }
  return target - fished_distance(lambda, p);
}

AdjointProfile extend_by_symmetry(const AdjointProfile& half,
                                  double tolerance) {
  if (half.end() != 0.0) {
    throw DomainError("extend_by_symmetry: half profile must end at x = 0");
  }
  const double slope_at_mid = half.lambda1(0.0);
  if (!(std::abs(slope_at_mid) <= tolerance)) {
    throw DomainError("extend_by_symmetry: |lambda1(0)| = " +
                      std::to_string(std::abs(slope_at_mid)) +
                      " exceeds tolerance");
  }
  const auto& segs = half.solution().segments();
  std::vector<SegmentSolution> full(segs.begin(), segs.end());
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    full.push_back(it->mirrored());
  }
  return AdjointProfile(PiecewiseSolution(std::move(full)));
}

HarvestPolicy neumann_variant_policy(const ScaledParams& sp) {
  const double q = sp.density_weight();
  const double hbar = sp.max_harvest();
  if (q == 1.0) {
    throw DomainError(
        "neumann_variant_policy: indeterminate at q = 1 (all constant rates "
        "give the same objective)");
  }
  return HarvestPolicy::constant(sp.length(), q < 1.0 ? hbar : 0.0, hbar);
}

double neumann_objective(double rate, double density_weight) {
  if (!(rate >= 0.0)) throw DomainError("neumann_objective: rate must be >= 0");
  return (density_weight + rate) / (1.0 + rate);
}

}  // namespace mpa
