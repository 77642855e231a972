#include "tautline/taut_string.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tautline/errors.hpp"

namespace tautline {

namespace {

struct Pt {
  double x;
  double y;
  std::size_t idx;
};

// slope(a,b) >= slope(b,c) without divisions; x strictly increasing.
inline bool slope_ge(const Pt& a, const Pt& b, const Pt& c) {
  return (b.y - a.y) * (c.x - b.x) >= (c.y - b.y) * (b.x - a.x);
}

inline bool slope_le(const Pt& a, const Pt& b, const Pt& c) {
  return (b.y - a.y) * (c.x - b.x) <= (c.y - b.y) * (b.x - a.x);
}

}  // namespace

// Forward sweep with two hulls anchored at the last committed knot: the
// greatest convex minorant of the ceiling nodes and the least concave
// majorant of the floor nodes. While the minorant's first slope stays at or
// above the majorant's, a straight feasible segment through every processed
// node still exists. When they cross, the hull whose first vertex is older
// holds the forced contact: that vertex is emitted as a knot (an upward kink
// on the ceiling, a downward kink on the floor) and the sweep restarts there.
PiecewiseLinearFunction solve_tube(const Tube& tube) {
  const bool has_lower = tube.lower.has_value();
  const bool has_upper = tube.upper.has_value();

  std::vector<double> xs;
  if (has_lower && has_upper) {
    xs = union_nodes(*tube.lower, *tube.upper);
  } else {
    xs = has_lower ? tube.lower->nodes() : tube.upper->nodes();
  }
  const std::size_t m = xs.size() - 1;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> lo =
      has_lower ? evaluate_on(*tube.lower, xs) : std::vector<double>(xs.size(), -inf);
  std::vector<double> up =
      has_upper ? evaluate_on(*tube.upper, xs) : std::vector<double>(xs.size(), inf);

  if (!(lo[0] <= tube.start_value && tube.start_value <= up[0])) {
    throw InfeasibleTubeError("pinned start value " + std::to_string(tube.start_value) +
                                  " outside obstacles at x = " + std::to_string(xs[0]),
                              xs[0]);
  }
  if (!(lo[m] <= tube.end_value && tube.end_value <= up[m])) {
    throw InfeasibleTubeError("pinned end value " + std::to_string(tube.end_value) +
                                  " outside obstacles at x = " + std::to_string(xs[m]),
                              xs[m]);
  }
  lo[0] = up[0] = tube.start_value;
  lo[m] = up[m] = tube.end_value;
  for (std::size_t j = 0; j <= m; ++j) {
    if (lo[j] > up[j]) {
      throw InfeasibleTubeError("tube is empty at node x = " + std::to_string(xs[j]), xs[j]);
    }
  }

  std::vector<double> kx{xs[0]};
  std::vector<double> ky{tube.start_value};
  Pt anchor{xs[0], tube.start_value, 0};
  std::vector<Pt> ceil_hull{anchor};
  std::vector<Pt> floor_hull{anchor};

  std::size_t i = 1;
  while (i <= m) {
    if (up[i] < inf) {
      Pt p{xs[i], up[i], i};
      while (ceil_hull.size() >= 2 &&
             slope_ge(ceil_hull[ceil_hull.size() - 2], ceil_hull.back(), p)) {
        ceil_hull.pop_back();
      }
      ceil_hull.push_back(p);
    }
    if (lo[i] > -inf) {
      Pt p{xs[i], lo[i], i};
      while (floor_hull.size() >= 2 &&
             slope_le(floor_hull[floor_hull.size() - 2], floor_hull.back(), p)) {
        floor_hull.pop_back();
      }
      floor_hull.push_back(p);
    }
    if (ceil_hull.size() >= 2 && floor_hull.size() >= 2) {
      const Pt& c1 = ceil_hull[1];
      const Pt& f1 = floor_hull[1];
      const bool crossing =
          (c1.y - anchor.y) * (f1.x - anchor.x) < (f1.y - anchor.y) * (c1.x - anchor.x);
      if (crossing) {
        const Pt knot = (c1.idx == i) ? f1 : c1;
        kx.push_back(knot.x);
        ky.push_back(knot.y);
        anchor = knot;
        ceil_hull.clear();
        ceil_hull.push_back(anchor);
        floor_hull.clear();
        floor_hull.push_back(anchor);
        i = knot.idx + 1;
        continue;
      }
    }
    ++i;
  }

  kx.push_back(xs[m]);
  ky.push_back(tube.end_value);
  return {std::move(kx), std::move(ky)};
}

std::vector<ContactInterval> contact_intervals(const PiecewiseLinearFunction& w,
                                               const PiecewiseLinearFunction& obstacle,
                                               double tol_scaled) {
  const std::vector<double> xs = union_nodes(w, obstacle);
  const std::vector<double> wv = evaluate_on(w, xs);
  const std::vector<double> ov = evaluate_on(obstacle, xs);
  std::vector<ContactInterval> out;
  std::size_t i = 0;
  while (i < xs.size()) {
    if (std::abs(wv[i] - ov[i]) <= tol_scaled) {
      std::size_t j = i;
      while (j + 1 < xs.size() && std::abs(wv[j + 1] - ov[j + 1]) <= tol_scaled) ++j;
      out.push_back({xs[i], xs[j]});
      i = j + 1;
    } else {
      ++i;
    }
  }
  return out;
}

DenoiseResult rof_denoise(const PiecewiseConstantSignal& f, double lambda, double tol) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite, got " + std::to_string(lambda));
  }
  const PiecewiseLinearFunction F = cumulative(f);
  const Tube tube = Tube::around(F, lambda);
  PiecewiseLinearFunction w = solve_tube(tube);
  PiecewiseConstantSignal u = derivative(w);
  PiecewiseLinearFunction xi = combine(F, w, 1.0 / lambda, -1.0 / lambda);
  const double j_u = total_variation(u);
  const double fidelity = l2_norm(f - u);
  const double energy = lambda * j_u + 0.5 * fidelity * fidelity;
  const double contact_tol = tol * std::max(1.0, linf_norm(F));
  std::vector<ContactInterval> contact_upper = contact_intervals(w, *tube.upper, contact_tol);
  std::vector<ContactInterval> contact_lower = contact_intervals(w, *tube.lower, contact_tol);
  return {lambda,          std::move(u),
          std::move(w),    std::move(xi),
          j_u,             energy,
          std::move(contact_upper), std::move(contact_lower)};
}

CertificateVerdict verify_certificate(const PiecewiseConstantSignal& f, double lambda,
                                      const PiecewiseConstantSignal& u,
                                      const PiecewiseLinearFunction& xi, double tol) {
  if (!(f.interval() == u.interval()) || !(f.interval() == xi.interval())) {
    throw DomainMismatchError("certificate pieces live on different intervals");
  }
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite");
  }

  CertificateVerdict v{};
  double f_scale = 1.0;
  for (double x : f.values()) f_scale = std::max(f_scale, std::abs(x));

  // (i) u = f - lambda * xi' pointwise on the refined grid
  const PiecewiseConstantSignal reconstructed = f - lambda * derivative(xi);
  const RefinedPair r = refine_pair(u, reconstructed);
  double identity_residual = 0.0;
  for (std::size_t i = 0; i < r.u.size(); ++i) {
    identity_residual = std::max(identity_residual, std::abs(r.u[i] - r.v[i]));
  }
  v.identity_residual = identity_residual;
  v.pointwise_identity = identity_residual <= tol * f_scale;

  // (ii) xi vanishes at the endpoints and stays within the unit ball
  const double end_a = std::abs(xi.values().front());
  const double end_b = std::abs(xi.values().back());
  const double sup = linf_norm(xi);
  v.bound_excess = std::max({end_a, end_b, sup - 1.0});
  v.certificate_bounds = end_a <= tol && end_b <= tol && sup <= 1.0 + tol;

  // (iii) the pairing attains the total variation
  const double j_u = total_variation(u);
  const double pairing = pairing_with_certificate(u, xi);
  v.pairing_residual = std::abs(j_u - pairing);
  v.pairing_matches = v.pairing_residual <= tol * (1.0 + j_u);

  if (!v.pointwise_identity) {
    v.detail = "u differs from f - lambda*xi' by " + std::to_string(identity_residual);
  } else if (!v.certificate_bounds) {
    v.detail = "certificate leaves the admissible set by " + std::to_string(v.bound_excess);
  } else if (!v.pairing_matches) {
    v.detail = "pairing misses J(u) by " + std::to_string(v.pairing_residual);
  }
  return v;
}

}  // namespace tautline
