#ifndef TAUTLINE_ISOTONIC_HPP
#define TAUTLINE_ISOTONIC_HPP

#include "tautline/piecewise_constant_signal.hpp"
#include "tautline/piecewise_linear_function.hpp"

namespace tautline {

// Maximal convex function lying below f (the lower convex hull of its node
// set, endpoints included).
PiecewiseLinearFunction lower_convex_envelope(const PiecewiseLinearFunction& f);

struct IsotonicResult {
  PiecewiseConstantSignal u;  // non-decreasing least-squares fit, = W'
  PiecewiseLinearFunction w;  // lower convex envelope of the cumulative signal
  double residual;            // (1/2)||u - f||^2
};

// Least-squares projection of f onto non-decreasing signals, computed as the
// derivative of the lower convex envelope of the cumulative signal.
IsotonicResult isotonic_fit(const PiecewiseConstantSignal& f);

// Pool-adjacent-violators with interval-length weights; independent check of
// the envelope route.
PiecewiseConstantSignal pava_oracle(const PiecewiseConstantSignal& f);

}  // namespace tautline

#endif  // TAUTLINE_ISOTONIC_HPP
