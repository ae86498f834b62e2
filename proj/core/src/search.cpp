#include <cstdio>
#include <string>

#include "mpa/bvp.hpp"
#include "mpa/error.hpp"
#include "mpa/synthesis.hpp"
#include "mpa/verification.hpp"

namespace mpa {

namespace {

double objective_of(const HarvestPolicy& policy, double q) {
  const HarvestPolicy m = policy.merged();
  return evaluate_objective(m, shoot_steady_state(m), q);
}

SweepResult rank(std::vector<Candidate> candidates, const ScaledParams& sp) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (candidates[i].objective > candidates[best].objective) best = i;
  }
  const double analytic = optimal_policy(sp).objective;
  const double gap = analytic - candidates[best].objective;
  return {std::move(candidates), best, analytic, gap};
}

}  // namespace

SweepResult brute_force_bangbang(const ScaledParams& sp, int cells) {
  if (cells < 1 || cells > kMaxBruteForceCells) {
    throw DomainError("brute_force_bangbang: cells must lie in [1, " +
                      std::to_string(kMaxBruteForceCells) + "], got " +
                      std::to_string(cells));
  }
  const double l = sp.length();
  const double hbar = sp.max_harvest();
  const std::size_t n = static_cast<std::size_t>(cells);
  const std::size_t count = std::size_t{1} << n;

  std::vector<Candidate> out;
  out.reserve(count);
  std::vector<bool> fished(n);
  std::string desc(n, '0');
  // Index bit (n - 1 - i) drives cell i, so index 0 is the all-reserve
  // policy and the last index is all-fished.
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < n; ++i) {
      fished[i] = ((mask >> (n - 1 - i)) & 1U) != 0;
      desc[i] = fished[i] ? 'H' : '0';
    }
    HarvestPolicy policy = HarvestPolicy::from_cells(l, hbar, fished).merged();
    const double j = objective_of(policy, sp.density_weight());
    out.push_back({desc, std::move(policy), j});
  }
  return rank(std::move(out), sp);
}

SweepResult reserve_sweep(const ScaledParams& sp, int centers, int widths) {
  if (centers < 2 || widths < 2) {
    throw DomainError("reserve_sweep: both grids need at least 2 points");
  }
  const double l = sp.length();
  const double hbar = sp.max_harvest();
  std::vector<Candidate> out;
  out.reserve(static_cast<std::size_t>(centers) * static_cast<std::size_t>(widths));
  char buf[96];
  for (int ci = 0; ci < centers; ++ci) {
    const double center = -0.5 * l + l * ci / (centers - 1);
    for (int wi = 0; wi < widths; ++wi) {
      const double width = l * wi / (widths - 1);
      HarvestPolicy policy =
          HarvestPolicy::single_reserve(l, hbar, center, width);
      std::snprintf(buf, sizeof buf, "center=%.17g width=%.17g", center, width);
      const double j = objective_of(policy, sp.density_weight());
      out.push_back({buf, std::move(policy), j});
    }
  }
  return rank(std::move(out), sp);
}

}  // namespace mpa
