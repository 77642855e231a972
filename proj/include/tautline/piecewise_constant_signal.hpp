#ifndef TAUTLINE_PIECEWISE_CONSTANT_SIGNAL_HPP
#define TAUTLINE_PIECEWISE_CONSTANT_SIGNAL_HPP

#include <cstddef>
#include <vector>

#include "tautline/interval.hpp"

namespace tautline {

// Piecewise constant function on an open bounded interval: value values()[i]
// on (breakpoints()[i], breakpoints()[i+1]). Always stored in canonical form:
// adjacent intervals with exactly equal values are merged at construction.
// Immutable after construction.
class PiecewiseConstantSignal {
 public:
  PiecewiseConstantSignal(std::vector<double> breakpoints, std::vector<double> values);

  // n equal-width intervals spanning `domain`.
  static PiecewiseConstantSignal uniform(const Interval& domain, std::vector<double> values);
  static PiecewiseConstantSignal constant(const Interval& domain, double value);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t interval_count() const { return values_.size(); }
  Interval interval() const { return {breakpoints_.front(), breakpoints_.back()}; }

  // Value at x (half-open cells [x_i, x_{i+1}); x = b falls in the last cell).
  double value_at(double x) const;

  // Merges adjacent values within eps (length-weighted means), for ingesting
  // noisy data. Canonical merging itself is always exact.
  PiecewiseConstantSignal simplify(double eps) const;

  friend bool operator==(const PiecewiseConstantSignal& lhs, const PiecewiseConstantSignal& rhs) {
    return lhs.breakpoints_ == rhs.breakpoints_ && lhs.values_ == rhs.values_;
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

// Pointwise arithmetic; binary ops refine both operands to the union grid and
// require identical intervals.
PiecewiseConstantSignal operator+(const PiecewiseConstantSignal& u, const PiecewiseConstantSignal& v);
PiecewiseConstantSignal operator-(const PiecewiseConstantSignal& u, const PiecewiseConstantSignal& v);
PiecewiseConstantSignal operator+(const PiecewiseConstantSignal& u, double c);
PiecewiseConstantSignal operator-(const PiecewiseConstantSignal& u, double c);
PiecewiseConstantSignal operator*(double c, const PiecewiseConstantSignal& u);

// Both signals resampled on the union of their breakpoint grids.
struct RefinedPair {
  std::vector<double> breakpoints;
  std::vector<double> u;
  std::vector<double> v;
};
RefinedPair refine_pair(const PiecewiseConstantSignal& u, const PiecewiseConstantSignal& v);

}  // namespace tautline

#endif  // TAUTLINE_PIECEWISE_CONSTANT_SIGNAL_HPP
