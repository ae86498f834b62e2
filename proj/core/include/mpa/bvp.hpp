#pragma once

#include <cstddef>
#include <vector>

#include "mpa/analytic.hpp"
#include "mpa/harvest_policy.hpp"

namespace mpa {

struct PhasePoint {
  double u;
  double v;
};

/// Exact flow of u' = v, v' = (1 + rate) u - 1 over a distance dx >= 0.
PhasePoint propagate_segment(double u0, double v0, double rate, double dx);

/// Contiguous chain of exact segment solutions.
class PiecewiseSolution {
 public:
  /// Throws DomainError unless the segments are non-empty and each starts
  /// where the previous one ends.
  explicit PiecewiseSolution(std::vector<SegmentSolution> segments);

  const std::vector<SegmentSolution>& segments() const noexcept {
    return segments_;
  }
  double start() const noexcept { return segments_.front().x0(); }
  double end() const noexcept { return segments_.back().x1(); }

  /// Right-continuous lookup; x = end() maps to the last segment.
  const SegmentSolution& segment_at(double x) const;
  double value(double x) const { return segment_at(x).value(x); }
  double slope(double x) const { return segment_at(x).slope(x); }

 private:
  std::vector<SegmentSolution> segments_;
};

struct StateSample {
  double x;
  double u;
  double v;
};

struct AdjointSample {
  double x;
  double lambda1;
  double lambda2;
};

/// Steady density u and its slope v for a given policy.
class StateProfile {
 public:
  StateProfile(PiecewiseSolution solution, double matching_residual)
      : solution_(std::move(solution)), matching_residual_(matching_residual) {}

  double u(double x) const { return solution_.value(x); }
  double v(double x) const { return solution_.slope(x); }
  double start() const noexcept { return solution_.start(); }
  double end() const noexcept { return solution_.end(); }
  const PiecewiseSolution& solution() const noexcept { return solution_; }

  /// Largest mismatch between the two half-shots where they meet, together
  /// with |u| at both coast ends.
  double boundary_residual() const noexcept { return matching_residual_; }

  /// `count` >= 2 equally spaced samples including both ends.
  std::vector<StateSample> samples(std::size_t count) const;

 private:
  PiecewiseSolution solution_;
  double matching_residual_;
};

/// Adjoint pair on [start(), end()]; lambda2 is the segment value and
/// lambda1 = -lambda2'.
class AdjointProfile {
 public:
  explicit AdjointProfile(PiecewiseSolution solution)
      : solution_(std::move(solution)) {}

  double lambda1(double x) const { return -solution_.slope(x); }
  double lambda2(double x) const { return solution_.value(x); }
  double start() const noexcept { return solution_.start(); }
  double end() const noexcept { return solution_.end(); }
  const PiecewiseSolution& solution() const noexcept { return solution_; }

  std::vector<AdjointSample> samples(std::size_t count) const;

 private:
  PiecewiseSolution solution_;
};

/// Steady state with u(-l/2) = u(l/2) = 0. Throws NumericalDefect if the
/// initial-slope bracket (0, 1) does not contain the solution.
StateProfile shoot_steady_state(const HarvestPolicy& policy);

/// j = (1/l) * integral of (q + h) u, integrated exactly segment by segment.
double evaluate_objective(const HarvestPolicy& policy,
                          const StateProfile& profile, double density_weight);

/// Adjoint solution with lambda2(-l/2) = lambda2(l/2) = 0.
AdjointProfile solve_adjoint(const HarvestPolicy& policy,
                             double density_weight);

/// Adjoint initial-value problem from (lambda1_start, 0) at x = -l/2,
/// followed up to x_end.
AdjointProfile propagate_adjoint(const HarvestPolicy& policy,
                                 double density_weight, double lambda1_start,
                                 double x_end);

/// Maximum deviation of the Hamiltonian from its mean over `count` equally
/// spaced points.
double hamiltonian_deviation(const StateProfile& state,
                             const AdjointProfile& adjoint,
                             const HarvestPolicy& policy,
                             double density_weight, std::size_t count = 1000);

double hamiltonian(double u, double v, double lambda1, double lambda2,
                   double rate, double density_weight, double length);

}  // namespace mpa
