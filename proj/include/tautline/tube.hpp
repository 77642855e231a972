#ifndef TAUTLINE_TUBE_HPP
#define TAUTLINE_TUBE_HPP

#include <optional>

#include "tautline/piecewise_linear_function.hpp"

namespace tautline {

// Feasible set for the string problem: piecewise linear obstacles
// lower <= W <= upper with W pinned at both interval endpoints. Either
// obstacle may be absent (one-sided tube), which serves isotonic regression.
struct Tube {
  std::optional<PiecewiseLinearFunction> lower;
  std::optional<PiecewiseLinearFunction> upper;
  double start_value;
  double end_value;

  Tube(std::optional<PiecewiseLinearFunction> lower_, std::optional<PiecewiseLinearFunction> upper_,
       double start, double end);

  Interval interval() const;

  // Symmetric tube center-radius <= W <= center+radius pinned at the center's
  // endpoint values (the denoising tube around a cumulative signal).
  static Tube around(const PiecewiseLinearFunction& center, double radius);

  // One-sided tube W <= ceiling pinned at the ceiling's endpoint values (the
  // obstacle problem whose solution is the lower convex envelope).
  static Tube below(const PiecewiseLinearFunction& ceiling);
};

}  // namespace tautline

#endif  // TAUTLINE_TUBE_HPP
