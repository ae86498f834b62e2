#pragma once

namespace mpa {

/// Physical model parameters of the coastline population.
///
/// Rates are per unit time, lengths in the user's length unit. Every field
/// must be strictly positive except the density weight, which may be zero.
class UnscaledParams {
 public:
  /// Throws DomainError on any invalid field.
  UnscaledParams(double diffusion, double recruitment, double death_rate,
                 double max_harvest, double density_weight, double length);

  double diffusion() const noexcept { return diffusion_; }
  double recruitment() const noexcept { return recruitment_; }
  double death_rate() const noexcept { return death_rate_; }
  double max_harvest() const noexcept { return max_harvest_; }
  double density_weight() const noexcept { return density_weight_; }
  double length() const noexcept { return length_; }

 private:
  double diffusion_;
  double recruitment_;
  double death_rate_;
  double max_harvest_;
  double density_weight_;
  double length_;
};

/// Dimensionless parameters: coastline length, density weight and maximal
/// harvest rate after diffusion, recruitment and death have been scaled out.
class ScaledParams {
 public:
  /// Throws DomainError unless length > 0, density_weight >= 0 and
  /// max_harvest > 0.
  ScaledParams(double length, double density_weight, double max_harvest);

  double length() const noexcept { return length_; }
  double density_weight() const noexcept { return density_weight_; }
  double max_harvest() const noexcept { return max_harvest_; }

 private:
  double length_;
  double density_weight_;
  double max_harvest_;
};

ScaledParams to_scaled(const UnscaledParams& p);

/// Natural length unit sqrt(D / mu).
double length_scale(const UnscaledParams& p);

/// Physical position of a dimensionless coordinate.
double to_unscaled_length(double x_scaled, const UnscaledParams& p);

/// Physical objective J = j * R.
double unscale_objective(double j, const UnscaledParams& p);

}  // namespace mpa
