#ifndef TAUTLINE_ORACLES_HPP
#define TAUTLINE_ORACLES_HPP

#include <functional>
#include <vector>

#include "tautline/piecewise_constant_signal.hpp"
#include "tautline/piecewise_linear_function.hpp"
#include "tautline/tube.hpp"

namespace tautline::oracles {

// Discretized tube: per-node box constraints on a refined grid with pinned
// endpoint values. Bounds may be +/-inf on an absent side.
struct GridProblem {
  std::vector<double> nodes;
  std::vector<double> lower_box;
  std::vector<double> upper_box;
  double pinned_start;
  double pinned_end;
};

// Obstacle boxes sampled at the tube's nodes, each cell split into
// `subdivisions` equal parts.
GridProblem discretize_tube(const Tube& tube, int subdivisions);

// Projected cyclic coordinate descent for min sum (W_{i+1}-W_i)^2 / dx_i over
// the boxes: every update is the exact 1D minimizer clipped into its box, the
// objective never increases, and the sweep loop stops once the largest node
// displacement in a sweep is at most tol_qp. Slow on purpose; this is the
// trust-minimal reference for solve_tube.
PiecewiseLinearFunction qp_solve(const GridProblem& grid, double tol_qp,
                                 long max_sweeps = 1'000'000);

PiecewiseLinearFunction qp_tube_solve(const PiecewiseConstantSignal& f, double lambda,
                                      int subdivisions = 4, double tol_qp = 1e-10);

// qp_tube_solve + derivative with per-cell slopes averaged back to the
// signal grid.
PiecewiseConstantSignal qp_tube_derivative(const PiecewiseConstantSignal& f, double lambda,
                                           int subdivisions = 4, double tol_qp = 1e-10);

// Same coordinate scheme for min sum H((W_{i+1}-W_i)/dx_i) dx_i with strictly
// convex C^1 H given through its derivative h = H'. The per-node stationarity
// h((W_i-W_{i-1})/dxL) = h((W_{i+1}-W_i)/dxR) is solved by bisection, then
// clipped into the box.
PiecewiseLinearFunction convex_energy_solve_grid(const GridProblem& grid,
                                                 const std::function<double(double)>& h_prime,
                                                 double tol_qp, long max_sweeps = 1'000'000);

PiecewiseLinearFunction convex_energy_solve(const PiecewiseConstantSignal& f, double lambda,
                                            const std::function<double(double)>& h_prime,
                                            int subdivisions = 4, double tol_qp = 1e-10);

// E_lambda(u) = lambda*J(u) + (1/2)||f - u||^2.
double rof_energy(const PiecewiseConstantSignal& f, const PiecewiseConstantSignal& u,
                  double lambda);

// (1/2)( ||f||^2 - ||f - lambda*xi'||^2 ); equals rof_energy at the optimal
// pair (strong duality) and never exceeds it otherwise.
double dual_energy(const PiecewiseConstantSignal& f, const PiecewiseLinearFunction& xi,
                   double lambda);

}  // namespace tautline::oracles

#endif  // TAUTLINE_ORACLES_HPP
