#pragma once

#include "mpa/error.hpp"

namespace mpa {

/// Distance travelled before a trajectory first reaches a target set, or the
/// explicit statement that it never does.
class HitTime {
 public:
  static constexpr HitTime never() noexcept { return HitTime(false, 0.0); }
  static constexpr HitTime at(double distance) noexcept {
    return HitTime(true, distance);
  }

  constexpr bool hits() const noexcept { return hits_; }

  double value() const {
    if (!hits_) throw DomainError("HitTime::value: trajectory never hits");
    return value_;
  }
  constexpr double value_or(double fallback) const noexcept {
    return hits_ ? value_ : fallback;
  }

  friend constexpr bool operator==(const HitTime&, const HitTime&) = default;

 private:
  constexpr HitTime(bool hits, double value) noexcept
      : hits_(hits), value_(value) {}

  bool hits_;
  double value_;
};

}  // namespace mpa
