#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mpa/harvest_policy.hpp"
#include "mpa/hit_time.hpp"
#include "mpa/params.hpp"

namespace mpa {

struct Candidate {
  std::string descriptor;
  HarvestPolicy policy;
  double objective;
};

struct SweepResult {
  std::vector<Candidate> candidates;
  std::size_t best;  // maximal objective, lowest index on ties
  double analytic_objective;
  double gap;  // analytic_objective - candidates[best].objective

  const Candidate& winner() const { return candidates[best]; }
};

inline constexpr int kMaxBruteForceCells = 16;

/// All 2^cells policies with rate 0 or hbar on equal cells. Descriptors
/// list the cells left to right, 'H' for fished and '0' for reserve.
/// Throws DomainError unless 1 <= cells <= kMaxBruteForceCells.
SweepResult brute_force_bangbang(const ScaledParams& sp, int cells);

/// Single reserves with centers on an even grid over [-l/2, l/2] and widths
/// on an even grid over [0, l]. Both counts must be >= 2.
SweepResult reserve_sweep(const ScaledParams& sp, int centers, int widths);

struct EventOptions {
  double tolerance = 1e-13;     // per-step error tolerance
  double event_precision = 1e-12;  // event location in x
  double horizon_factor = 10.0;    // give up after horizon_factor * l
};

struct EventResult {
  HitTime hit;
  int crossings;           // switching-line crossings before the hit
  double lambda2_at_end;   // lambda2 at the hit, or at the horizon
};

/// Integrates the switched adjoint field from (lambda0, 0) with an adaptive
/// Dormand-Prince 5(4) scheme, flipping the control each time lambda2
/// crosses -1/l, until lambda1 returns to 0. Requires lambda0 > 0 and q > 1.
EventResult integrate_adjoint_with_events(double lambda0,
                                          const ScaledParams& sp,
                                          const EventOptions& options = {});

struct PdeOptions {
  double dx = 0.0;  // 0 selects l / 4096
  double dt = 0.0;  // 0 selects l / 512
  double t_max = 40.0;
  double record_every = 1.0;  // history spacing in time
};

struct PdeSample {
  double x;
  double u;
};

struct PdeResult {
  std::vector<PdeSample> final_state;
  double distance;  // L2 distance to the steady-state BVP solution
  std::vector<std::pair<double, double>> history;  // (t, distance)
};

/// Backward-Euler finite-volume evolution of u_t = u_xx - (1 + h) u + 1
/// from u = 0 with u = 0 at both ends. Grid nodes include every breakpoint.
/// Throws NumericalDefect if the solution stops being finite.
PdeResult pde_time_stepper(const HarvestPolicy& policy,
                           const PdeOptions& options = {});

struct SpectrumResult {
  double max_eigenvalue;
  bool all_negative;
};

/// Largest eigenvalue of the second-difference discretization of
/// w -> w'' - (1 + h) w on `interior` equally spaced points with Dirichlet
/// ends. Requires interior >= 16.
SpectrumResult stability_eigenvalues(const HarvestPolicy& policy,
                                     int interior);

}  // namespace mpa
