#include <gtest/gtest.h>

#include <cmath>

#include "mpa/bvp.hpp"
#include "mpa/error.hpp"
#include "mpa/switching.hpp"
#include "mpa/synthesis.hpp"
#include "mpa/verification.hpp"

namespace mpa {
namespace {

TEST(BruteForce, WeakWeightPicksFullHarvest) {
  const SweepResult r = brute_force_bangbang(ScaledParams(2, 0.5, 1), 12);
  EXPECT_EQ(r.candidates.size(), 4096u);
  EXPECT_EQ(r.winner().descriptor, std::string(12, 'H'));
  EXPECT_GE(r.gap, -1e-12);
}

TEST(BruteForce, StrongWeightPicksCenteredBlock) {
  const SweepResult r = brute_force_bangbang(ScaledParams(4, 2, 1), 12);
  const std::string& d = r.winner().descriptor;
  const auto first = d.find('0');
  const auto last = d.rfind('0');
  ASSERT_NE(first, std::string::npos);
  EXPECT_EQ(d.substr(first, last - first + 1), std::string(last - first + 1, '0'));
  EXPECT_EQ(first, d.size() - 1 - last);
  EXPECT_GE(r.gap, -1e-9);
}

TEST(BruteForce, SingleCellFollowsConstantObjective) {
  for (const ScaledParams& sp : {ScaledParams(2, 0.5, 1), ScaledParams(6, 3, 1),
                                 ScaledParams(1, 3, 1)}) {
    const SweepResult r = brute_force_bangbang(sp, 1);
    ASSERT_EQ(r.candidates.size(), 2u);
    const double l = sp.length(), q = sp.density_weight();
    const auto j = [&](double h) {
      const double k = std::sqrt(1 + h);
      return (q + h) / (1 + h) * (1 - 2 / (k * l) * std::tanh(k * l / 2));
    };
    EXPECT_EQ(r.winner().descriptor, j(1.0) > j(0.0) ? "H" : "0");
  }
}

TEST(BruteForce, CellCap) {
  EXPECT_THROW(brute_force_bangbang(ScaledParams(2, 1, 1), 0), DomainError);
  EXPECT_THROW(brute_force_bangbang(ScaledParams(2, 1, 1), 17), DomainError);
}

TEST(ReserveSweep, CenteredReserveOfPredictedWidthWins) {
  const ScaledParams sp(4, 2, 1);
  const int widths = 81;
  const SweepResult r = reserve_sweep(sp, 41, widths);
  const auto extent = single_reserve_extent(r.winner().policy);
  ASSERT_TRUE(extent);
  EXPECT_NEAR(extent->left + extent->right, 0.0, 1e-12);
  const double predicted = 2.0 * (2.0 - reserve_edge_distance(sp));
  EXPECT_LE(std::abs((extent->right - extent->left) - predicted),
            4.0 / (widths - 1) + 1e-12);
  EXPECT_GE(r.gap, -1e-9);
}

TEST(ReserveSweep, ShortCoastPrefersNoReserve) {
  const SweepResult r = reserve_sweep(ScaledParams(2, 2, 1), 21, 41);
  EXPECT_TRUE(r.winner().policy.is_constant());
  EXPECT_EQ(r.winner().policy.rates().front(), 1.0);
  EXPECT_EQ(r.best, 0u);
  EXPECT_THROW(reserve_sweep(ScaledParams(2, 2, 1), 1, 5), DomainError);
}

TEST(EventOracle, RegimesMatchClosedForm) {
  const ScaledParams sp(4, 2, 1);
  const DerivedConstants dc = derive_constants(sp);
  const EventResult before = integrate_adjoint_with_events(0.3, sp);
  EXPECT_EQ(before.crossings, 0);
  EXPECT_NEAR(before.hit.value(), axis_hit_time(0.3, dc).value(), 1e-8);
  const double mid = 0.5 * (dc.grazing_lambda0 + dc.escape_lambda0);
  const EventResult after = integrate_adjoint_with_events(mid, sp);
  EXPECT_EQ(after.crossings, 1);
  EXPECT_NEAR(after.hit.value(), axis_hit_time(mid, dc).value(), 1e-8);
  EXPECT_FALSE(integrate_adjoint_with_events(dc.escape_lambda0 * 1.05, sp).hit.hits());
  EXPECT_THROW(integrate_adjoint_with_events(0.0, sp), DomainError);
  EXPECT_THROW(integrate_adjoint_with_events(0.1, ScaledParams(4, 1, 1)), DomainError);
}

TEST(EventOracle, AgreesWithClosedFormOnGrid) {
  for (double q : {1.5, 2.0, 5.0}) {
    for (double hbar : {0.5, 1.0, 4.0}) {
      for (double l : {2.0, 4.0, 10.0}) {
        const ScaledParams sp(l, q, hbar);
        const DerivedConstants dc = derive_constants(sp);
        for (int i = 0; i < 200; ++i) {
          const double lambda0 = dc.escape_lambda0 * (i + 0.5) / 200.0;
          const EventResult e = integrate_adjoint_with_events(lambda0, sp);
          ASSERT_TRUE(e.hit.hits());
          EXPECT_NEAR(e.hit.value(), axis_hit_time(lambda0, dc).value(), 1e-8);
          EXPECT_EQ(e.crossings, lambda0 > dc.grazing_lambda0 ? 1 : 0);
        }
      }
    }
  }
}

TEST(PdeStepper, ConstantPolicyConverges) {
  PdeOptions o;
  o.t_max = 20.0;
  const PdeResult r = pde_time_stepper(HarvestPolicy::constant(2, 1, 1), o);
  EXPECT_LE(r.distance, 1e-6);
  EXPECT_EQ(r.final_state.front().u, 0.0);
  EXPECT_EQ(r.final_state.back().u, 0.0);
}

TEST(PdeStepper, OptimalPolicyConvergesMonotonically) {
  const OptimalSolution s = optimal_policy(ScaledParams(4, 2, 1));
  const PdeResult r = pde_time_stepper(s.policy);
  EXPECT_LE(r.distance, 1e-6);
  ASSERT_GE(r.history.size(), 40u);
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    EXPECT_LE(r.history[i].second, r.history[i - 1].second) << r.history[i].first;
  }
  EXPECT_THROW(pde_time_stepper(s.policy, PdeOptions{0, 0, -1, 1}), DomainError);
}

TEST(PdeStepper, GridContainsBreakpoints) {
  const HarvestPolicy p({-2, -0.7, 1.3, 2}, {1, 0, 1}, 1);
  const PdeResult r = pde_time_stepper(p, PdeOptions{0.05, 0.05, 1.0, 1.0});
  int found = 0;
  for (const PdeSample& s : r.final_state) found += s.x == -0.7 || s.x == 1.3;
  EXPECT_EQ(found, 2);
}

TEST(Stability, DirichletLaplacianSpectrum) {
  const double pi = std::acos(-1.0);
  const int n = 512;
  const SpectrumResult r = stability_eigenvalues(HarvestPolicy::constant(pi, 0, 1), n);
  const double step = pi / (n + 1);
  const double discrete = -1.0 - 4.0 / (step * step) * std::pow(std::sin(0.5 * step), 2);
  EXPECT_NEAR(r.max_eigenvalue, discrete, 1e-9);
  EXPECT_NEAR(r.max_eigenvalue, -2.0, 1e-4);
  EXPECT_TRUE(r.all_negative);
}

TEST(Stability, OptimalPolicyIsStable) {
  const OptimalSolution s = optimal_policy(ScaledParams(4, 2, 1));
  const SpectrumResult a = stability_eigenvalues(s.policy, 256);
  const SpectrumResult b = stability_eigenvalues(s.policy, 512);
  EXPECT_LE(b.max_eigenvalue, -1.0);
  EXPECT_LE(std::abs(a.max_eigenvalue - b.max_eigenvalue), 1e-4);
  EXPECT_THROW(stability_eigenvalues(s.policy, 15), DomainError);
}

}  // namespace
}  // namespace mpa
