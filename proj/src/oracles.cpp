#include "tautline/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tautline/errors.hpp"
#include "tautline/signal_ops.hpp"

namespace tautline::oracles {

namespace {

void check_feasible(const GridProblem& g) {
  const std::size_t m = g.nodes.size() - 1;
  for (std::size_t j = 0; j < g.nodes.size(); ++j) {
    if (g.lower_box[j] > g.upper_box[j]) {
      throw InfeasibleTubeError("boxes are empty at node x = " + std::to_string(g.nodes[j]),
                                g.nodes[j]);
    }
  }
  if (g.pinned_start < g.lower_box[0] || g.pinned_start > g.upper_box[0]) {
    throw InfeasibleTubeError("pinned start outside its box", g.nodes[0]);
  }
  if (g.pinned_end < g.lower_box[m] || g.pinned_end > g.upper_box[m]) {
    throw InfeasibleTubeError("pinned end outside its box", g.nodes[m]);
  }
}

// Chord between the pinned values, clipped into the boxes.
std::vector<double> initial_guess(const GridProblem& g) {
  const std::size_t n = g.nodes.size();
  std::vector<double> w(n);
  const double x0 = g.nodes.front();
  const double slope = (g.pinned_end - g.pinned_start) / (g.nodes.back() - x0);
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = std::clamp(g.pinned_start + slope * (g.nodes[j] - x0), g.lower_box[j], g.upper_box[j]);
  }
  w.front() = g.pinned_start;
  w.back() = g.pinned_end;
  return w;
}

double quadratic_objective(const GridProblem& g, const std::vector<double>& w) {
  double e = 0.0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) {
    const double d = w[j + 1] - w[j];
    e += d * d / (g.nodes[j + 1] - g.nodes[j]);
  }
  return e;
}

}  // namespace

GridProblem discretize_tube(const Tube& tube, int subdivisions) {
  if (subdivisions < 1) {
    throw ParameterError("subdivisions must be at least 1");
  }
  std::vector<double> coarse;
  if (tube.lower && tube.upper) {
    coarse = union_nodes(*tube.lower, *tube.upper);
  } else {
    coarse = tube.lower ? tube.lower->nodes() : tube.upper->nodes();
  }
  std::vector<double> nodes;
  nodes.reserve((coarse.size() - 1) * static_cast<std::size_t>(subdivisions) + 1);
  for (std::size_t i = 0; i + 1 < coarse.size(); ++i) {
    const double h = (coarse[i + 1] - coarse[i]) / subdivisions;
    nodes.push_back(coarse[i]);
    for (int k = 1; k < subdivisions; ++k) {
      nodes.push_back(coarse[i] + k * h);
    }
  }
  nodes.push_back(coarse.back());

  const double inf = std::numeric_limits<double>::infinity();
  GridProblem g;
  g.lower_box = tube.lower ? evaluate_on(*tube.lower, nodes) : std::vector<double>(nodes.size(), -inf);
  g.upper_box = tube.upper ? evaluate_on(*tube.upper, nodes) : std::vector<double>(nodes.size(), inf);
  g.nodes = std::move(nodes);
  g.pinned_start = tube.start_value;
  g.pinned_end = tube.end_value;
  return g;
}

PiecewiseLinearFunction qp_solve(const GridProblem& g, double tol_qp, long max_sweeps) {
  check_feasible(g);
  std::vector<double> w = initial_guess(g);
  const std::size_t n = w.size();
  if (n > 2) {
    double prev_objective = quadratic_objective(g, w);
    for (long sweep = 0;; ++sweep) {
      if (sweep >= max_sweeps) {
        throw ConvergenceError("qp_solve hit the sweep cap of " + std::to_string(max_sweeps));
      }
      double max_move = 0.0;
      auto relax = [&](std::size_t j) {
        const double h_left = g.nodes[j] - g.nodes[j - 1];
        const double h_right = g.nodes[j + 1] - g.nodes[j];
        const double target = (w[j - 1] * h_right + w[j + 1] * h_left) / (h_left + h_right);
        const double next = std::clamp(target, g.lower_box[j], g.upper_box[j]);
        max_move = std::max(max_move, std::abs(next - w[j]));
        w[j] = next;
      };
      for (std::size_t j = 1; j + 1 < n; ++j) relax(j);
      for (std::size_t j = n - 2; j >= 1; --j) relax(j);
      const double objective = quadratic_objective(g, w);
      if (objective > prev_objective + 1e-10 * (1.0 + std::abs(prev_objective))) {
        throw InvariantViolationError("qp_solve objective increased across a sweep");
      }
      prev_objective = objective;
      if (max_move <= tol_qp) break;
    }
  }
  return {g.nodes, std::move(w)};
}

PiecewiseLinearFunction qp_tube_solve(const PiecewiseConstantSignal& f, double lambda,
                                      int subdivisions, double tol_qp) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite");
  }
  return qp_solve(discretize_tube(Tube::around(cumulative(f), lambda), subdivisions), tol_qp);
}

PiecewiseConstantSignal qp_tube_derivative(const PiecewiseConstantSignal& f, double lambda,
                                           int subdivisions, double tol_qp) {
  const PiecewiseLinearFunction w = qp_tube_solve(f, lambda, subdivisions, tol_qp);
  const auto& bps = f.breakpoints();
  const std::vector<double> wv = evaluate_on(w, bps);
  std::vector<double> slopes(bps.size() - 1);
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    slopes[i] = (wv[i + 1] - wv[i]) / (bps[i + 1] - bps[i]);
  }
  return {bps, std::move(slopes)};
}

PiecewiseLinearFunction convex_energy_solve_grid(const GridProblem& g,
                                                 const std::function<double(double)>& h_prime,
                                                 double tol_qp, long max_sweeps) {
  check_feasible(g);
  std::vector<double> w = initial_guess(g);
  const std::size_t n = w.size();
  const double bisect_tol = tol_qp / 10.0;

  // Root of v -> h((v - wl)/hl) - h((wr - v)/hr), strictly increasing in v.
  auto stationary_point = [&](double wl, double wr, double hl, double hr) {
    const double pad = 10.0 * (1.0 + std::max(std::abs(wl), std::abs(wr)));
    double lo = std::min(wl, wr) - pad;
    double hi = std::max(wl, wr) + pad;
    auto slope_gap = [&](double v) { return h_prime((v - wl) / hl) - h_prime((wr - v) / hr); };
    double g_lo = slope_gap(lo);
    double g_hi = slope_gap(hi);
    if (g_lo > 0.0 || g_hi < 0.0 || g_lo > g_hi) {
      throw ParameterError("h' is not monotone increasing over the bisection bracket");
    }
    while (hi - lo > bisect_tol) {
      const double mid = 0.5 * (lo + hi);
      if (slope_gap(mid) <= 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };

  if (n > 2) {
    for (long sweep = 0;; ++sweep) {
      if (sweep >= max_sweeps) {
        throw ConvergenceError("convex_energy_solve hit the sweep cap of " +
                               std::to_string(max_sweeps));
      }
      double max_move = 0.0;
      auto relax = [&](std::size_t j) {
        const double h_left = g.nodes[j] - g.nodes[j - 1];
        const double h_right = g.nodes[j + 1] - g.nodes[j];
        const double target = stationary_point(w[j - 1], w[j + 1], h_left, h_right);
        const double next = std::clamp(target, g.lower_box[j], g.upper_box[j]);
        max_move = std::max(max_move, std::abs(next - w[j]));
        w[j] = next;
      };
      for (std::size_t j = 1; j + 1 < n; ++j) relax(j);
      for (std::size_t j = n - 2; j >= 1; --j) relax(j);
      if (max_move <= tol_qp) break;
    }
  }
  return {g.nodes, std::move(w)};
}

PiecewiseLinearFunction convex_energy_solve(const PiecewiseConstantSignal& f, double lambda,
                                            const std::function<double(double)>& h_prime,
                                            int subdivisions, double tol_qp) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite");
  }
  return convex_energy_solve_grid(discretize_tube(Tube::around(cumulative(f), lambda), subdivisions),
                                  h_prime, tol_qp);
}

double rof_energy(const PiecewiseConstantSignal& f, const PiecewiseConstantSignal& u,
                  double lambda) {
  const double fidelity = l2_norm(f - u);
  return lambda * total_variation(u) + 0.5 * fidelity * fidelity;
}

double dual_energy(const PiecewiseConstantSignal& f, const PiecewiseLinearFunction& xi,
                   double lambda) {
  if (!(f.interval() == xi.interval())) {
    throw DomainMismatchError("signal and certificate live on different intervals");
  }
  const PiecewiseConstantSignal residual = f - lambda * derivative(xi);
  const double nf = l2_norm(f);
  const double nr = l2_norm(residual);
  return 0.5 * (nf * nf - nr * nr);
}

}  // namespace tautline::oracles
