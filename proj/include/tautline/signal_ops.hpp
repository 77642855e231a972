#ifndef TAUTLINE_SIGNAL_OPS_HPP
#define TAUTLINE_SIGNAL_OPS_HPP

#include "tautline/atomic_measure.hpp"
#include "tautline/piecewise_constant_signal.hpp"
#include "tautline/piecewise_linear_function.hpp"

namespace tautline {

// Cumulative signal F(x) = integral of f from a to x; F(a) = 0, nodes at f's
// breakpoints, slope v_i on the i-th interval.
PiecewiseLinearFunction cumulative(const PiecewiseConstantSignal& f);

// Distributional derivative of a piecewise linear function: the piecewise
// constant signal of segment slopes, canonicalized. Inverts cumulative().
PiecewiseConstantSignal derivative(const PiecewiseLinearFunction& w);

// Distributional derivative of a piecewise constant signal: one point mass
// per interior breakpoint with the jump v_{i+1} - v_i as its mass.
AtomicMeasure jump_measure(const PiecewiseConstantSignal& u);

// Total variation J(u): sum of absolute interior jumps. Boundary values do
// not contribute (the interval is open).
double total_variation(const PiecewiseConstantSignal& u);

double l2_norm(const PiecewiseConstantSignal& u);
double l2_inner(const PiecewiseConstantSignal& u, const PiecewiseConstantSignal& v);

// sup-norm of a piecewise linear function; extrema of linear pieces occur at
// nodes, so this is exact.
double linf_norm(const PiecewiseLinearFunction& w);

// <u, xi'> = integral of u * xi' over the shared interval, evaluated exactly
// on the union grid. For ||xi||_inf <= 1 this is bounded by J(u).
double pairing_with_certificate(const PiecewiseConstantSignal& u,
                                const PiecewiseLinearFunction& xi);

struct MeanZeroSplit {
  PiecewiseConstantSignal zero_mean;
  double mean;
};
// f = zero_mean + mean with the mean taken over the whole interval.
MeanZeroSplit mean_zero_split(const PiecewiseConstantSignal& f);

}  // namespace tautline

#endif  // TAUTLINE_SIGNAL_OPS_HPP
