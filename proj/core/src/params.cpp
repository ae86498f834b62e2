#include "mpa/params.hpp"

#include <cmath>
#include <string>

#include "mpa/error.hpp"

namespace mpa {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite and > 0, got " +
                      std::to_string(value));
  }
}

void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite and >= 0, got " +
                      std::to_string(value));
  }
}

}  // namespace

UnscaledParams::UnscaledParams(double diffusion, double recruitment,
                               double death_rate, double max_harvest,
                               double density_weight, double length)
    : diffusion_(diffusion),
      recruitment_(recruitment),
      death_rate_(death_rate),
      max_harvest_(max_harvest),
      density_weight_(density_weight),
      length_(length) {
  require_positive(diffusion, "D");
  require_positive(recruitment, "R");
  require_positive(death_rate, "mu");
  require_positive(max_harvest, "Hbar");
  require_non_negative(density_weight, "Q");
  require_positive(length, "L");
}

ScaledParams::ScaledParams(double length, double density_weight,
                           double max_harvest)
    : length_(length),
      density_weight_(density_weight),
      max_harvest_(max_harvest) {
  require_positive(length, "l");
  require_non_negative(density_weight, "q");
  require_positive(max_harvest, "hbar");
}

double length_scale(const UnscaledParams& p) {
  return std::sqrt(p.diffusion() / p.death_rate());
}

ScaledParams to_scaled(const UnscaledParams& p) {
  return ScaledParams(p.length() / length_scale(p),
                      p.density_weight() / p.death_rate(),
                      p.max_harvest() / p.death_rate());
}

double to_unscaled_length(double x_scaled, const UnscaledParams& p) {
  return x_scaled * length_scale(p);
}

double unscale_objective(double j, const UnscaledParams& p) {
  return j * p.recruitment();
}

}  // namespace mpa
