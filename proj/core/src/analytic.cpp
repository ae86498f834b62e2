#include "mpa/analytic.hpp"

#include <cmath>
#include <string>

#include "mpa/error.hpp"
#include "special.hpp"

namespace mpa {

using detail::arcoth;
using detail::artanh;
using detail::sech;

SegmentSolution::SegmentSolution(double k, double offset, double left,
                                 double right, double x0, double x1)
    : k_(k), offset_(offset), left_(left), right_(right), x0_(x0), x1_(x1) {
  if (!(k > 0.0)) throw DomainError("SegmentSolution: k must be > 0");
  if (!(x0 < x1)) throw DomainError("SegmentSolution: requires x0 < x1");
}

SegmentSolution SegmentSolution::from_start(double k, double offset,
                                            double y0, double dy0, double x0,
                                            double x1) {
  const double w0 = y0 - offset;
  const double e = std::exp(-k * (x1 - x0));
  // left + right e = w0, k (right e - left) = dy0
  const double grow = 0.5 * (w0 + dy0 / k);
  const double left = 0.5 * (w0 - dy0 / k);
  return SegmentSolution(k, offset, left, grow / e, x0, x1);
}

SegmentSolution SegmentSolution::from_end(double k, double offset, double y1,
                                          double dy1, double x0, double x1) {
  const double w1 = y1 - offset;
  const double e = std::exp(-k * (x1 - x0));
  const double decay = 0.5 * (w1 - dy1 / k);
  const double right = 0.5 * (w1 + dy1 / k);
  return SegmentSolution(k, offset, decay / e, right, x0, x1);
}

double SegmentSolution::value(double x) const {
  return offset_ + left_ * std::exp(-k_ * (x - x0_)) +
         right_ * std::exp(-k_ * (x1_ - x));
}

double SegmentSolution::slope(double x) const {
  return k_ * (right_ * std::exp(-k_ * (x1_ - x)) -
               left_ * std::exp(-k_ * (x - x0_)));
}

double SegmentSolution::curvature(double x) const {
  return k_ * k_ * (value(x) - offset_);
}

double SegmentSolution::integral() const {
  const double d = x1_ - x0_;
  return offset_ * d - (left_ + right_) * std::expm1(-k_ * d) / k_;
}

double SegmentSolution::cosh_coeff() const {
  return left_ + right_ * std::exp(-k_ * (x1_ - x0_));
}

double SegmentSolution::sinh_coeff() const {
  return right_ * std::exp(-k_ * (x1_ - x0_)) - left_;
}

SegmentSolution SegmentSolution::mirrored() const {
  return SegmentSolution(k_, offset_, right_, left_, -x1_, -x0_);
}

SegmentSolution constant_control_steady_state(double rate, double length) {
  if (!(rate >= 0.0)) {
    throw DomainError("constant_control_steady_state: rate must be >= 0");
  }
  if (!(length > 0.0)) {
    throw DomainError("constant_control_steady_state: length must be > 0");
  }
  const double k = std::sqrt(1.0 + rate);
  const double offset = 1.0 / (1.0 + rate);
  // sech(k l/2) cosh(k x) = (e^{k x - k l/2} + e^{-k x - k l/2}) / (1 + e^{-k l})
  const double c = -offset / (1.0 + std::exp(-k * length));
  return SegmentSolution(k, offset, c, c, -0.5 * length, 0.5 * length);
}

double optimal_shoot_slope(double max_harvest, double length) {
  if (!(max_harvest > 0.0) || !(length > 0.0)) {
    throw DomainError("optimal_shoot_slope: requires hbar > 0 and l > 0");
  }
  const double k = std::sqrt(max_harvest + 1.0);
  return std::tanh(0.5 * k * length) / k;
}

double state_return_time(double v0, double max_harvest, double length) {
  const double k = std::sqrt(max_harvest + 1.0);
  if (!(v0 > 0.0) || !(v0 < 1.0 / k)) {
    throw DomainError("state_return_time: v0 must lie in (0, 1/sqrt(hbar+1))");
  }
  return 2.0 / k * arcoth(1.0 / (v0 * k)) - 0.5 * length;
}

double adjoint_stable_intercept(double max_harvest, double density_weight,
                                double length) {
  return (max_harvest + density_weight) /
         (std::sqrt(max_harvest + 1.0) * length);
}

namespace {

void require_adjoint_start(double lambda0, double intercept, const char* op) {
  if (!(lambda0 > 0.0) || !(lambda0 < intercept)) {
    throw DomainError(std::string(op) +
                      ": lambda0 must lie in (0, stable intercept " +
                      std::to_string(intercept) + ")");
  }
}

}  // namespace

AdjointValue adjoint_constant_hbar(double lambda0, double max_harvest,
                                   double density_weight, double length,
                                   double x) {
  const double intercept =
      adjoint_stable_intercept(max_harvest, density_weight, length);
  require_adjoint_start(lambda0, intercept, "adjoint_constant_hbar");
  const double k = std::sqrt(max_harvest + 1.0);
  const double beta = artanh(lambda0 / intercept) / k;
  const double phase = k * (x + 0.5 * length - beta);
  const double s = sech(k * beta);
  return {-intercept * s * std::sinh(phase),
          intercept / k * (s * std::cosh(phase) - 1.0)};
}

double adjoint_return_time_q_le_1(double lambda0, double max_harvest,
                                  double density_weight, double length) {
  const double intercept =
      adjoint_stable_intercept(max_harvest, density_weight, length);
  require_adjoint_start(lambda0, intercept, "adjoint_return_time_q_le_1");
  const double k = std::sqrt(max_harvest + 1.0);
  return 2.0 / k * artanh(lambda0 / intercept) - 0.5 * length;
}

double adjoint_boundary_start(double max_harvest, double density_weight,
                              double length) {
  const double k = std::sqrt(max_harvest + 1.0);
  return adjoint_stable_intercept(max_harvest, density_weight, length) *
         std::tanh(0.5 * k * length);
}

}  // namespace mpa
