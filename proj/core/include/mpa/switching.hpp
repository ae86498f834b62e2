#pragma once

#include "mpa/hit_time.hpp"
#include "mpa/params.hpp"

namespace mpa {

/// Constants of the hybrid adjoint system when the density weight q > 1.
///
/// The adjoint field is lambda1' = -a lambda2 - b/l, lambda2' = -lambda1 with
/// (a, b) = (hbar + 1, hbar + q) while fishing and (1, q) inside a reserve.
/// The switching line is lambda2 = -1/l.
struct DerivedConstants {
  double length;
  double fished_stiffness;   // hbar + 1
  double fished_weight;      // hbar + q
  double reserve_stiffness;  // 1
  double reserve_weight;     // q
  /// lambda1-axis intercepts of the stable manifolds.
  double fished_stable_intercept;
  double reserve_stable_intercept;
  /// lambda2-coordinates of the saddle equilibria.
  double fished_equilibrium;
  double reserve_equilibrium;
  /// lambda1-coordinates where the stable manifolds cross the switching line.
  double fished_switch_intercept;
  double reserve_switch_intercept;
  /// Start value whose fished orbit touches the switching line exactly on
  /// the lambda2 axis.
  double grazing_lambda0;
  /// Start value above which the trajectory never returns to the lambda2 axis.
  double escape_lambda0;
  double min_length;
};

/// Saddle of lambda1' = -a lambda2 - b/l, lambda2' = -lambda1. Slopes are
/// d lambda2 / d lambda1 of the invariant lines through the equilibrium.
struct SaddleGeometry {
  double equilibrium_lambda1;
  double equilibrium_lambda2;
  double stable_slope;
  double unstable_slope;
};

/// Throws DomainError unless q > 1.
DerivedConstants derive_constants(const ScaledParams& sp);

SaddleGeometry saddle_geometry(double a, double b, double length);

/// Closed-form branches of the axis hitting time, in increasing lambda0.
enum class HitBranch {
  kBeforeGrazing,    // no switch before the axis
  kBelowIntercept,   // one switch, lambda0 < fished stable intercept
  kAtIntercept,      // one switch, lambda0 == fished stable intercept
  kAboveIntercept,   // one switch, lambda0 > fished stable intercept
  kEscapes,          // never returns to the axis
};

HitBranch axis_hit_branch(double lambda0, const DerivedConstants& dc);

/// Evaluates the formula of `branch` at lambda0 without checking that lambda0
/// lies in that branch's interval (the formula must still be defined there).
double axis_hit_time_branch(HitBranch branch, double lambda0,
                            const DerivedConstants& dc);

/// First x > 0 at which the hybrid adjoint trajectory started at
/// (lambda0, 0) reaches lambda1 = 0.
HitTime axis_hit_time(double lambda0, const DerivedConstants& dc);

/// Distance from the start to the first crossing of the switching line.
/// Requires lambda0 >= grazing_lambda0.
double switch_time(double lambda0, const DerivedConstants& dc);

/// lambda1-coordinate at which the trajectory reaches the switching line.
double switch_line_lambda1(double lambda0, const DerivedConstants& dc);

/// Distance from the switching line, entered at lambda1 = `entry`, to the
/// lambda2 axis under the reserve field. Requires 0 < entry <=
/// reserve_switch_intercept; the upper end never arrives.
HitTime post_switch_time(double entry, const DerivedConstants& dc);

/// Minimal coastline length above which a reserve is optimal (q > 1).
double min_length(const ScaledParams& sp);

/// The unique lambda0 in (0, escape_lambda0) with axis hit time l/2.
double solve_boundary_lambda(const DerivedConstants& dc);

/// Distance from each coast end to the reserve edge. Requires q > 1 and
/// l > min_length.
double reserve_edge_distance(const ScaledParams& sp);

/// Auxiliary function whose sign controls the monotonicity of the axis
/// hitting time; vanishes at grazing_lambda0. Requires lambda0 >=
/// grazing_lambda0.
double monotonicity_witness(double lambda0, const DerivedConstants& dc);

}  // namespace mpa
