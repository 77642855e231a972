#include "tautline/signal_ops.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tautline/errors.hpp"

namespace tautline {

PiecewiseLinearFunction cumulative(const PiecewiseConstantSignal& f) {
  const auto& bps = f.breakpoints();
  const auto& vals = f.values();
  std::vector<double> node_values(bps.size());
  node_values[0] = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    node_values[i + 1] = node_values[i] + vals[i] * (bps[i + 1] - bps[i]);
  }
  return {bps, std::move(node_values)};
}

PiecewiseConstantSignal derivative(const PiecewiseLinearFunction& w) {
  const auto& xs = w.nodes();
  const auto& ys = w.values();
  std::vector<double> slopes(xs.size() - 1);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    slopes[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
  }
  return {xs, std::move(slopes)};
}

AtomicMeasure jump_measure(const PiecewiseConstantSignal& u) {
  const auto& bps = u.breakpoints();
  const auto& vals = u.values();
  std::vector<AtomicMeasure::Atom> atoms;
  atoms.reserve(vals.size());
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    atoms.push_back({bps[i + 1], vals[i + 1] - vals[i]});
  }
  return AtomicMeasure(std::move(atoms));
}

double total_variation(const PiecewiseConstantSignal& u) {
  const auto& vals = u.values();
  double tv = 0.0;
  for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
    tv += std::abs(vals[i + 1] - vals[i]);
  }
  return tv;
}

double l2_norm(const PiecewiseConstantSignal& u) {
  const auto& bps = u.breakpoints();
  const auto& vals = u.values();
  double s = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    s += vals[i] * vals[i] * (bps[i + 1] - bps[i]);
  }
  return std::sqrt(s);
}

double l2_inner(const PiecewiseConstantSignal& u, const PiecewiseConstantSignal& v) {
  RefinedPair r = refine_pair(u, v);
  double s = 0.0;
  for (std::size_t i = 0; i < r.u.size(); ++i) {
    s += r.u[i] * r.v[i] * (r.breakpoints[i + 1] - r.breakpoints[i]);
  }
  return s;
}

double linf_norm(const PiecewiseLinearFunction& w) {
  double m = 0.0;
  for (double v : w.values()) m = std::max(m, std::abs(v));
  return m;
}

double pairing_with_certificate(const PiecewiseConstantSignal& u,
                                const PiecewiseLinearFunction& xi) {
  if (!(u.interval() == xi.interval())) {
    throw DomainMismatchError("signal and certificate live on different intervals");
  }
  // Union grid of u's breakpoints and xi's nodes; on each cell the integrand
  // is u_cell * xi', and the integral telescopes to u_cell * (xi(r) - xi(l)).
  std::vector<double> grid;
  grid.reserve(u.breakpoints().size() + xi.node_count());
  std::merge(u.breakpoints().begin(), u.breakpoints().end(), xi.nodes().begin(), xi.nodes().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const std::vector<double> xi_vals = evaluate_on(xi, grid);

  double s = 0.0;
  std::size_t cell = 0;
  const auto& bps = u.breakpoints();
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    while (cell + 1 < bps.size() - 1 && bps[cell + 1] <= grid[i]) ++cell;
    s += u.values()[cell] * (xi_vals[i + 1] - xi_vals[i]);
  }
  return s;
}

MeanZeroSplit mean_zero_split(const PiecewiseConstantSignal& f) {
  const auto& bps = f.breakpoints();
  const auto& vals = f.values();
  double integral = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    integral += vals[i] * (bps[i + 1] - bps[i]);
  }
  const double mean = integral / f.interval().length();
  return {f - mean, mean};
}

}  // namespace tautline
