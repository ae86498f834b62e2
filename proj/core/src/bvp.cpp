#include "mpa/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mpa/error.hpp"

namespace mpa {

namespace {

// Largest k*|dx| handled in one hyperbolic step; cosh stays far from
// overflow and the flow property makes the split exact.
constexpr double kMaxStep = 350.0;

struct Piece {
  double k;
  double offset;
  double x0;
  double x1;
};

// y'' = k^2 (y - offset); dx may be negative.
PhasePoint flow(double k, double offset, PhasePoint p, double dx) {
  const int steps =
      std::max(1, static_cast<int>(std::ceil(k * std::abs(dx) / kMaxStep)));
  const double h = dx / steps;
  const double c = std::cosh(k * h);
  const double s = std::sinh(k * h);
  double w = p.u - offset;
  double v = p.v;
  for (int i = 0; i < steps; ++i) {
    const double w_next = c * w + s * v / k;
    v = k * s * w + c * v;
    w = w_next;
  }
  return {w + offset, v};
}

// Pieces of the policy with an extra split at the coast midpoint.
template <class OffsetOf>
std::vector<Piece> pieces_for(const HarvestPolicy& policy, OffsetOf offset_of) {
  const auto& b = policy.breakpoints();
  const auto& r = policy.rates();
  std::vector<Piece> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double k = std::sqrt(1.0 + r[i]);
    const double off = offset_of(r[i]);
    if (b[i] < 0.0 && b[i + 1] > 0.0) {
      out.push_back({k, off, b[i], 0.0});
      out.push_back({k, off, 0.0, b[i + 1]});
    } else {
      out.push_back({k, off, b[i], b[i + 1]});
    }
  }
  return out;
}

// Values at the midpoint of the shot from each end: a particular solution
// starting from (0, 0) and the homogeneous response to a unit slope.
struct MatchSystem {
  PhasePoint left_particular;
  PhasePoint left_unit;
  PhasePoint right_particular;
  PhasePoint right_unit;

  // Slope at the right end that matches u at the midpoint for left slope s.
  double right_slope(double s) const {
    return (left_particular.u + s * left_unit.u - right_particular.u) /
           right_unit.u;
  }
  // Jump in v at the midpoint after matching u.
  double mismatch(double s) const {
    return left_particular.v + s * left_unit.v -
           (right_particular.v + right_slope(s) * right_unit.v);
  }
};

MatchSystem build_match(const std::vector<Piece>& pieces) {
  MatchSystem m{{0.0, 0.0}, {0.0, 1.0}, {0.0, 0.0}, {0.0, 1.0}};
  for (const Piece& p : pieces) {
    if (p.x1 > 0.0) break;
    const double dx = p.x1 - p.x0;
    m.left_particular = flow(p.k, p.offset, m.left_particular, dx);
    m.left_unit = flow(p.k, 0.0, m.left_unit, dx);
  }
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    if (it->x0 < 0.0) break;
    const double dx = it->x0 - it->x1;
    m.right_particular = flow(it->k, it->offset, m.right_particular, dx);
    m.right_unit = flow(it->k, 0.0, m.right_unit, dx);
  }
  return m;
}

// Segments of the two half-shots; the left half is built forward from
// (0, s), the right half backward from (0, t).
std::vector<SegmentSolution> assemble(const std::vector<Piece>& pieces,
                                      double s, double t) {
  std::vector<SegmentSolution> segs;
  segs.reserve(pieces.size());
  PhasePoint p{0.0, s};
  for (const Piece& pc : pieces) {
    if (pc.x1 > 0.0) break;
    segs.push_back(
        SegmentSolution::from_start(pc.k, pc.offset, p.u, p.v, pc.x0, pc.x1));
    p = {segs.back().value(pc.x1), segs.back().slope(pc.x1)};
  }
  const std::size_t mid = segs.size();
  p = {0.0, t};
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    if (it->x0 < 0.0) break;
    segs.push_back(
        SegmentSolution::from_end(it->k, it->offset, p.u, p.v, it->x0, it->x1));
    p = {segs.back().value(it->x0), segs.back().slope(it->x0)};
  }
  std::reverse(segs.begin() + static_cast<std::ptrdiff_t>(mid), segs.end());
  return segs;
}

double matching_residual(const PiecewiseSolution& sol) {
  double worst = std::max(std::abs(sol.value(sol.start())),
                          std::abs(sol.value(sol.end())));
  const auto& segs = sol.segments();
  for (std::size_t i = 1; i < segs.size(); ++i) {
    const double x = segs[i].x0();
    worst = std::max(worst, std::abs(segs[i - 1].value(x) - segs[i].value(x)));
    worst = std::max(worst, std::abs(segs[i - 1].slope(x) - segs[i].slope(x)));
  }
  return worst;
}

double state_offset(double rate) { return 1.0 / (1.0 + rate); }

}  // namespace

PhasePoint propagate_segment(double u0, double v0, double rate, double dx) {
  if (!(rate >= 0.0)) throw DomainError("propagate_segment: rate must be >= 0");
  if (!(dx >= 0.0)) throw DomainError("propagate_segment: dx must be >= 0");
  return flow(std::sqrt(1.0 + rate), state_offset(rate), {u0, v0}, dx);
}

PiecewiseSolution::PiecewiseSolution(std::vector<SegmentSolution> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) {
    throw DomainError("PiecewiseSolution: needs at least one segment");
  }
  for (std::size_t i = 1; i < segments_.size(); ++i) {
    if (segments_[i].x0() != segments_[i - 1].x1()) {
      throw DomainError("PiecewiseSolution: segments are not contiguous");
    }
  }
}

const SegmentSolution& PiecewiseSolution::segment_at(double x) const {
  if (!(x >= start() && x <= end())) {
    throw DomainError("PiecewiseSolution: x outside the solution interval");
  }
  const auto it = std::upper_bound(
      segments_.begin(), segments_.end(), x,
      [](double value, const SegmentSolution& s) { return value < s.x1(); });
  return it == segments_.end() ? segments_.back() : *it;
}

namespace {

template <class Fn>
auto sample_grid(double a, double b, std::size_t count, Fn fn) {
  if (count < 2) throw DomainError("samples: need at least 2 points");
  std::vector<decltype(fn(a))> out;
  out.reserve(count);
  const double n = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double x =
        i + 1 == count ? b : a + (b - a) * static_cast<double>(i) / n;
    out.push_back(fn(x));
  }
  return out;
}

}  // namespace

std::vector<StateSample> StateProfile::samples(std::size_t count) const {
  return sample_grid(start(), end(), count, [&](double x) {
    const SegmentSolution& s = solution_.segment_at(x);
    return StateSample{x, s.value(x), s.slope(x)};
  });
}

std::vector<AdjointSample> AdjointProfile::samples(std::size_t count) const {
  return sample_grid(start(), end(), count, [&](double x) {
    const SegmentSolution& s = solution_.segment_at(x);
    return AdjointSample{x, -s.slope(x), s.value(x)};
  });
}

StateProfile shoot_steady_state(const HarvestPolicy& policy) {
  const auto pieces = pieces_for(policy, state_offset);
  const MatchSystem m = build_match(pieces);

  double lo = 0.0;
  double hi = 1.0;
  double g_lo = m.mismatch(lo);
  double g_hi = m.mismatch(hi);
  if (!(std::isfinite(g_lo) && std::isfinite(g_hi)) || g_lo * g_hi > 0.0) {
    throw NumericalDefect(
        "shoot_steady_state: initial slope not bracketed by (0, 1)");
  }
  for (int it = 0; it < 200 && g_lo != 0.0 && g_hi != 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double g_mid = m.mismatch(mid);
    if ((g_mid < 0.0) == (g_lo < 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
  }
  // The mismatch is affine in s, so the secant through the final bracket
  // is its root up to rounding.
  double s = g_lo == 0.0 ? lo : g_hi == 0.0 ? hi : lo - g_lo * (hi - lo) / (g_hi - g_lo);
  if (!(s >= lo && s <= hi)) s = 0.5 * (lo + hi);

  PiecewiseSolution sol(assemble(pieces, s, m.right_slope(s)));
  const double residual = matching_residual(sol);
  return StateProfile(std::move(sol), residual);
}

double evaluate_objective(const HarvestPolicy& policy,
                          const StateProfile& profile, double density_weight) {
  double total = 0.0;
  for (const SegmentSolution& seg : profile.solution().segments()) {
    const double rate = policy.rate_at(0.5 * (seg.x0() + seg.x1()));
    total += (density_weight + rate) * seg.integral();
  }
  return total / policy.length();
}

namespace {

std::vector<Piece> adjoint_pieces(const HarvestPolicy& policy,
                                  double density_weight) {
  const double l = policy.length();
  return pieces_for(policy, [&](double rate) {
    return -(rate + density_weight) / ((1.0 + rate) * l);
  });
}

}  // namespace

AdjointProfile solve_adjoint(const HarvestPolicy& policy,
                             double density_weight) {
  if (!(density_weight >= 0.0)) {
    throw DomainError("solve_adjoint: density weight must be >= 0");
  }
  const auto pieces = adjoint_pieces(policy, density_weight);
  const MatchSystem m = build_match(pieces);
  // Affine mismatch: root from two evaluations.
  const double g0 = m.mismatch(0.0);
  const double g1 = m.mismatch(1.0);
  if (!(std::isfinite(g0) && std::isfinite(g1)) || g1 == g0) {
    throw NumericalDefect("solve_adjoint: degenerate shooting map");
  }
  const double s = -g0 / (g1 - g0);
  return AdjointProfile(PiecewiseSolution(assemble(pieces, s, m.right_slope(s))));
}

AdjointProfile propagate_adjoint(const HarvestPolicy& policy,
                                 double density_weight, double lambda1_start,
                                 double x_end) {
  const double half = 0.5 * policy.length();
  if (!(x_end > -half && x_end <= half)) {
    throw DomainError("propagate_adjoint: x_end must lie in (-l/2, l/2]");
  }
  std::vector<SegmentSolution> segs;
  PhasePoint p{0.0, -lambda1_start};
  for (const Piece& pc : adjoint_pieces(policy, density_weight)) {
    if (pc.x0 >= x_end) break;
    const double x1 = std::min(pc.x1, x_end);
    segs.push_back(
        SegmentSolution::from_start(pc.k, pc.offset, p.u, p.v, pc.x0, x1));
    p = {segs.back().value(x1), segs.back().slope(x1)};
  }
  return AdjointProfile(PiecewiseSolution(std::move(segs)));
}

double hamiltonian(double u, double v, double lambda1, double lambda2,
                   double rate, double density_weight, double length) {
  return (rate + density_weight) * u / length + lambda1 * v +
         lambda2 * ((1.0 + rate) * u - 1.0);
}

double hamiltonian_deviation(const StateProfile& state,
                             const AdjointProfile& adjoint,
                             const HarvestPolicy& policy,
                             double density_weight, std::size_t count) {
  const double l = policy.length();
  const auto xs = sample_grid(-0.5 * l, 0.5 * l, count, [](double x) { return x; });
  std::vector<double> values;
  values.reserve(xs.size());
  double mean = 0.0;
  for (double x : xs) {
    values.push_back(hamiltonian(state.u(x), state.v(x), adjoint.lambda1(x),
                                 adjoint.lambda2(x), policy.rate_at(x),
                                 density_weight, l));
    mean += values.back();
  }
  mean /= static_cast<double>(values.size());
  double worst = 0.0;
  for (double h : values) worst = std::max(worst, std::abs(h - mean));
  return worst;
}

}  // namespace mpa
