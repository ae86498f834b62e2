#include <algorithm>
#include <cmath>
#include <vector>

#include "mpa/error.hpp"
#include "mpa/verification.hpp"

namespace mpa {

namespace {

// Number of eigenvalues of the symmetric tridiagonal matrix below sigma.
int count_below(const std::vector<double>& diag, double off, double sigma) {
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    d = diag[i] - sigma - (i == 0 ? 0.0 : off * off / d);
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++count;
  }
  return count;
}

// Mean harvest rate over [a, b], exact for the piecewise-constant policy.
double mean_rate(const HarvestPolicy& policy, double a, double b) {
  const auto& bp = policy.breakpoints();
  const auto& rates = policy.rates();
  double total = 0.0;
  for (std::size_t i = 0; i < rates.size(); ++i) {
    const double lo = std::max(a, bp[i]);
    const double hi = std::min(b, bp[i + 1]);
    if (hi > lo) total += rates[i] * (hi - lo);
  }
  return total / (b - a);
}

}  // namespace

SpectrumResult stability_eigenvalues(const HarvestPolicy& policy,
                                     int interior) {
  if (interior < 16) {
    throw DomainError("stability_eigenvalues: need at least 16 interior points");
  }
  const double l = policy.length();
  const int n = interior;
  const double step = l / (n + 1);
  const double off = 1.0 / (step * step);
  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = -0.5 * l + step * (i + 1);
    // Cell averages keep second-order accuracy across rate jumps.
    diag[static_cast<std::size_t>(i)] =
        -2.0 * off - (1.0 + mean_rate(policy, x - 0.5 * step, x + 0.5 * step));
  }

  // Gershgorin bounds.
  double lo = *std::min_element(diag.begin(), diag.end()) - 2.0 * off;
  double hi = *std::max_element(diag.begin(), diag.end()) + 2.0 * off;
  // The largest eigenvalue is the smallest sigma with all n eigenvalues below.
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (count_below(diag, off, mid) == n ? hi : lo) = mid;
  }
  if (!std::isfinite(hi)) {
    throw NumericalDefect("stability_eigenvalues: bisection did not converge");
  }
  return {hi, hi < 0.0};
}

}  // namespace mpa
