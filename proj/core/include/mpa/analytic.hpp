#pragma once

namespace mpa {

/// Exact solution of y'' = k^2 (y - offset) on [x0, x1].
///
/// Stored in the decaying-exponential basis
///   y(x) = offset + left * exp(-k (x - x0)) + right * exp(-k (x1 - x)),
/// whose basis functions are bounded by 1 on the segment, so evaluation
/// stays accurate however large k (x1 - x0) is. The equivalent cosh/sinh
/// coefficients about x0 are available through cosh_coeff()/sinh_coeff().
class SegmentSolution {
 public:
  SegmentSolution(double k, double offset, double left, double right,
                  double x0, double x1);

  /// Segment through (y0, dy0) at x0.
  static SegmentSolution from_start(double k, double offset, double y0,
                                    double dy0, double x0, double x1);
  /// Segment through (y1, dy1) at x1.
  static SegmentSolution from_end(double k, double offset, double y1,
                                  double dy1, double x0, double x1);

  double value(double x) const;
  double slope(double x) const;
  double curvature(double x) const;
  /// Exact integral of value() over [x0, x1].
  double integral() const;

  /// y(x) = offset + A cosh(k (x - x0)) + B sinh(k (x - x0)).
  double cosh_coeff() const;
  double sinh_coeff() const;

  double k() const noexcept { return k_; }
  double offset() const noexcept { return offset_; }
  double left() const noexcept { return left_; }
  double right() const noexcept { return right_; }
  double x0() const noexcept { return x0_; }
  double x1() const noexcept { return x1_; }

  /// The segment y~(x) = y(-x) on [-x1, -x0].
  SegmentSolution mirrored() const;

 private:
  double k_;
  double offset_;
  double left_;
  double right_;
  double x0_;
  double x1_;
};

/// Steady state for the constant harvest rate `rate` on [-l/2, l/2]:
/// u(x) = (1 - sech(k l/2) cosh(k x)) / (1 + rate), k = sqrt(1 + rate).
SegmentSolution constant_control_steady_state(double rate, double length);

/// Initial slope u'(-l/2) of the constant-maximal-harvest steady state.
double optimal_shoot_slope(double max_harvest, double length);

/// Position at which the constant-maximal-harvest state started at
/// (0, v0) on x = -l/2 returns to u = 0. Requires 0 < v0 < 1/sqrt(hbar+1).
double state_return_time(double v0, double max_harvest, double length);

struct AdjointValue {
  double lambda1;
  double lambda2;
};

/// Intercept (hbar + q) / (sqrt(hbar + 1) l) of the stable manifold of the
/// constant-maximal-harvest adjoint system with the lambda1 axis.
double adjoint_stable_intercept(double max_harvest, double density_weight,
                                double length);

/// Adjoint pair at x for the constant-maximal-harvest control started at
/// (lambda0, 0) on x = -l/2. Requires 0 < lambda0 < stable intercept.
AdjointValue adjoint_constant_hbar(double lambda0, double max_harvest,
                                   double density_weight, double length,
                                   double x);

/// Position at which that adjoint trajectory returns to lambda2 = 0.
double adjoint_return_time_q_le_1(double lambda0, double max_harvest,
                                  double density_weight, double length);

/// The unique lambda0 whose return time equals l/2.
double adjoint_boundary_start(double max_harvest, double density_weight,
                              double length);

}  // namespace mpa
