#include "mpa/harvest_policy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mpa/error.hpp"

namespace mpa {

HarvestPolicy::HarvestPolicy(std::vector<double> breakpoints,
                             std::vector<double> rates, double max_harvest)
    : breakpoints_(std::move(breakpoints)),
      rates_(std::move(rates)),
      max_harvest_(max_harvest) {
  if (!(max_harvest_ > 0.0) || !std::isfinite(max_harvest_)) {
    throw DomainError("HarvestPolicy: max harvest must be positive");
  }
  if (breakpoints_.size() < 2 || rates_.size() + 1 != breakpoints_.size()) {
    throw DomainError("HarvestPolicy: need n+1 breakpoints for n rates");
  }
  const double half = breakpoints_.back();
  if (!(half > 0.0) || !std::isfinite(half) || breakpoints_.front() != -half) {
    throw DomainError("HarvestPolicy: endpoints must be -l/2 and l/2");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw DomainError("HarvestPolicy: breakpoints must strictly increase");
    }
  }
  for (double r : rates_) {
    if (!(r >= 0.0 && r <= max_harvest_)) {
      throw DomainError("HarvestPolicy: rate " + std::to_string(r) +
                        " outside [0, max harvest]");
    }
  }
}

HarvestPolicy HarvestPolicy::constant(double length, double rate,
                                      double max_harvest) {
  return HarvestPolicy({-0.5 * length, 0.5 * length}, {rate}, max_harvest);
}

HarvestPolicy HarvestPolicy::centered_reserve(double length,
                                              double max_harvest,
                                              double edge_distance) {
  const double half = 0.5 * length;
  if (!(edge_distance > 0.0)) {
    throw DomainError("centered_reserve: edge distance must be > 0");
  }
  if (edge_distance >= half) return constant(length, max_harvest, max_harvest);
  const double edge = half - edge_distance;
  return HarvestPolicy({-half, -edge, edge, half},
                       {max_harvest, 0.0, max_harvest}, max_harvest);
}

HarvestPolicy HarvestPolicy::from_cells(double length, double max_harvest,
                                        const std::vector<bool>& fished) {
  const std::size_t n = fished.size();
  if (n == 0) throw DomainError("from_cells: need at least one cell");
  const double half = 0.5 * length;
  std::vector<double> breaks(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    breaks[i] = -half + length * static_cast<double>(i) / static_cast<double>(n);
  }
  breaks.back() = half;
  std::vector<double> rates(n);
  for (std::size_t i = 0; i < n; ++i) rates[i] = fished[i] ? max_harvest : 0.0;
  return HarvestPolicy(std::move(breaks), std::move(rates), max_harvest);
}

HarvestPolicy HarvestPolicy::single_reserve(double length, double max_harvest,
                                            double center, double width) {
  const double half = 0.5 * length;
  if (!(width >= 0.0)) throw DomainError("single_reserve: width must be >= 0");
  const double lo = std::max(-half, center - 0.5 * width);
  const double hi = std::min(half, center + 0.5 * width);
  if (!(lo < hi)) return constant(length, max_harvest, max_harvest);

  std::vector<double> breaks{-half};
  std::vector<double> rates;
  if (lo > -half) {
    breaks.push_back(lo);
    rates.push_back(max_harvest);
  }
  rates.push_back(0.0);
  if (hi < half) {
    breaks.push_back(hi);
    rates.push_back(max_harvest);
  }
  breaks.push_back(half);
  return HarvestPolicy(std::move(breaks), std::move(rates), max_harvest);
}

double HarvestPolicy::rate_at(double x) const {
  if (!(x >= breakpoints_.front() && x <= breakpoints_.back())) {
    throw DomainError("HarvestPolicy::rate_at: x outside the coast");
  }
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  return rates_[std::min(idx, rates_.size()) - 1];
}

HarvestPolicy HarvestPolicy::merged() const {
  std::vector<double> breaks{breakpoints_.front()};
  std::vector<double> rates{rates_.front()};
  for (std::size_t i = 1; i < rates_.size(); ++i) {
    if (rates_[i] != rates.back()) {
      breaks.push_back(breakpoints_[i]);
      rates.push_back(rates_[i]);
    }
  }
  breaks.push_back(breakpoints_.back());
  return HarvestPolicy(std::move(breaks), std::move(rates), max_harvest_);
}

bool HarvestPolicy::is_constant() const {
  return std::all_of(rates_.begin(), rates_.end(),
                     [&](double r) { return r == rates_.front(); });
}

std::optional<ReserveExtent> single_reserve_extent(
    const HarvestPolicy& policy) {
  const HarvestPolicy m = policy.merged();
  std::optional<ReserveExtent> found;
  for (std::size_t i = 0; i < m.segment_count(); ++i) {
    if (m.rates()[i] != 0.0) continue;
    if (found) {
      throw DomainError("single_reserve_extent: more than one reserve");
    }
    found = ReserveExtent{m.breakpoints()[i], m.breakpoints()[i + 1]};
  }
  return found;
}

}  // namespace mpa
