#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace mpa {

/// Piecewise-constant harvest rate on [-l/2, l/2].
///
/// Segment i covers [breakpoints[i], breakpoints[i+1]) and carries rates[i];
/// the last segment is closed on the right. Rates may take any value in
/// [0, max_harvest] so that non-optimal candidates can be expressed.
class HarvestPolicy {
 public:
  /// Throws DomainError unless breakpoints are strictly increasing with
  /// front() == -back() > 0, rates.size() == breakpoints.size() - 1 and every
  /// rate lies in [0, max_harvest].
  HarvestPolicy(std::vector<double> breakpoints, std::vector<double> rates,
                double max_harvest);

  static HarvestPolicy constant(double length, double rate,
                                double max_harvest);
  /// Fishing at max_harvest within `edge_distance` of either end and a
  /// reserve in between. Returns the constant policy when the edge distance
  /// covers half the coast.
  static HarvestPolicy centered_reserve(double length, double max_harvest,
                                        double edge_distance);
  /// Equal-width cells, fished at max_harvest where `fished[i]` is set.
  static HarvestPolicy from_cells(double length, double max_harvest,
                                  const std::vector<bool>& fished);
  /// One reserve of the given width around `center`, clipped to the coast.
  static HarvestPolicy single_reserve(double length, double max_harvest,
                                      double center, double width);

  const std::vector<double>& breakpoints() const noexcept {
    return breakpoints_;
  }
  const std::vector<double>& rates() const noexcept { return rates_; }
  double max_harvest() const noexcept { return max_harvest_; }
  double length() const noexcept { return breakpoints_.back() * 2.0; }
  std::size_t segment_count() const noexcept { return rates_.size(); }

  /// Right-continuous rate; x = l/2 belongs to the last segment.
  double rate_at(double x) const;

  /// Same policy with neighbouring equal-rate segments joined.
  HarvestPolicy merged() const;

  bool is_constant() const;

  friend bool operator==(const HarvestPolicy&, const HarvestPolicy&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> rates_;
  double max_harvest_;
};

/// Zero-rate interval of a policy with exactly one contiguous reserve.
struct ReserveExtent {
  double left;
  double right;
};

/// The single zero-rate interval, or nothing when the policy has none.
/// Throws DomainError if zero-rate segments are not contiguous.
std::optional<ReserveExtent> single_reserve_extent(const HarvestPolicy& policy);

}  // namespace mpa
