#pragma once

#include <cstddef>
#include <optional>

#include "mpa/bvp.hpp"
#include "mpa/harvest_policy.hpp"
#include "mpa/params.hpp"

namespace mpa {

/// Residuals of the maximum-principle conditions for a policy.
struct Diagnostics {
  double boundary_residual;      // state shooting mismatch
  double transversality;         // max |lambda2| at the coast ends
  double hamiltonian_deviation;  // max |H - mean H| on the sample grid
  double switch_mismatch;        // max |lambda2 + 1/l| at interior breakpoints
  bool switching_law_holds;      // rate agrees with the sign of lambda2 + 1/l
};

struct OptimalSolution {
  HarvestPolicy policy;
  double reserve_halfwidth;  // 0 when no reserve
  double objective;
  std::optional<double> lambda_bar;
  std::optional<double> edge_distance;  // from each coast end to the reserve
  std::optional<double> min_length;
  Diagnostics diagnostics;
};

OptimalSolution optimal_policy(const ScaledParams& sp);

/// Samples where |lambda2 + 1/l| <= tolerance count as consistent with
/// either rate.
Diagnostics pontryagin_diagnostics(const HarvestPolicy& policy,
                                   double density_weight,
                                   const StateProfile& state,
                                   const AdjointProfile& adjoint,
                                   std::size_t samples = 1000,
                                   double switch_tolerance = 1e-9);

/// Minimal physical coast length for a reserve. Requires Q > mu.
double unscaled_min_length(const UnscaledParams& p);

struct Interval {
  double lower;
  double upper;
};

/// Open interval on which the reserve boundary function is defined.
/// Requires Q > mu.
Interval reserve_boundary_domain(const UnscaledParams& p);

/// Physical distance from a coast end to the axis arrival, as a function of
/// the normalized start value lambda in reserve_boundary_domain(p).
double reserve_boundary_function(double lambda, const UnscaledParams& p);

/// Physical half-width B of the optimal reserve, computed entirely in
/// physical units by inverting reserve_boundary_function. Absent when no
/// reserve is optimal.
std::optional<double> unscaled_reserve_boundary(const UnscaledParams& p);

/// Completes a profile on [-l/2, 0] with lambda1(0) = 0 to [-l/2, l/2] by
/// lambda1(x) = -lambda1(-x), lambda2(x) = lambda2(-x). Throws DomainError if
/// the half does not end at 0 or |lambda1(0)| > tolerance.
AdjointProfile extend_by_symmetry(const AdjointProfile& half,
                                  double tolerance = 1e-8);

/// Optimal policy when the coast ends are zero-flux instead of lethal.
/// Throws DomainError at q = 1, where every constant rate ties.
HarvestPolicy neumann_variant_policy(const ScaledParams& sp);

/// Objective of the constant rate under zero-flux ends: (q + h) / (1 + h).
double neumann_objective(double rate, double density_weight);

}  // namespace mpa
