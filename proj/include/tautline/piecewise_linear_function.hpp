#ifndef TAUTLINE_PIECEWISE_LINEAR_FUNCTION_HPP
#define TAUTLINE_PIECEWISE_LINEAR_FUNCTION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "tautline/interval.hpp"

namespace tautline {

// Continuous piecewise linear function given by node abscissae and values;
// the function is the linear interpolant between consecutive nodes.
// Immutable after construction.
class PiecewiseLinearFunction {
 public:
  PiecewiseLinearFunction(std::vector<double> nodes, std::vector<double> values);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t node_count() const { return nodes_.size(); }
  Interval interval() const { return {nodes_.front(), nodes_.back()}; }

  // Interpolated value; x is clamped to [a, b].
  double operator()(double x) const;

  friend bool operator==(const PiecewiseLinearFunction& lhs, const PiecewiseLinearFunction& rhs) {
    return lhs.nodes_ == rhs.nodes_ && lhs.values_ == rhs.values_;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
};

// ca*A + cb*B on the union node grid; intervals must match exactly.
PiecewiseLinearFunction combine(const PiecewiseLinearFunction& a, const PiecewiseLinearFunction& b,
                                double ca, double cb);

// Same nodes, values shifted / scaled.
PiecewiseLinearFunction shift(const PiecewiseLinearFunction& f, double dy);
PiecewiseLinearFunction scale(const PiecewiseLinearFunction& f, double c);

// Union of the two node grids (exact-equality dedupe). Intervals must match.
std::vector<double> union_nodes(const PiecewiseLinearFunction& a, const PiecewiseLinearFunction& b);

// Values of f at the sorted grid xs (xs must lie within f's interval; single
// left-to-right walk). Grid points equal to f's own nodes evaluate exactly.
std::vector<double> evaluate_on(const PiecewiseLinearFunction& f, std::span<const double> xs);

}  // namespace tautline

#endif  // TAUTLINE_PIECEWISE_LINEAR_FUNCTION_HPP
