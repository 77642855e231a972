#include "tautline/piecewise_linear_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tautline/errors.hpp"

namespace tautline {

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<double> nodes,
                                                 std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() < 2) {
    throw ParameterError("piecewise linear function needs at least two nodes");
  }
  if (values_.size() != nodes_.size()) {
    throw ParameterError("need one value per node, got " + std::to_string(values_.size()) +
                         " values for " + std::to_string(nodes_.size()) + " nodes");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!std::isfinite(nodes_[i]) || !std::isfinite(values_[i])) {
      throw ParameterError("node " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(nodes_[i - 1] < nodes_[i])) {
      throw ParameterError("nodes must be strictly increasing at index " + std::to_string(i));
    }
  }
}

double PiecewiseLinearFunction::operator()(double x) const {
  if (x <= nodes_.front()) return values_.front();
  if (x >= nodes_.back()) return values_.back();
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  const std::size_t k = static_cast<std::size_t>(it - nodes_.begin());  // x in [nodes_[k-1], nodes_[k])
  if (x == nodes_[k - 1]) return values_[k - 1];
  const double t = (x - nodes_[k - 1]) / (nodes_[k] - nodes_[k - 1]);
  return values_[k - 1] + t * (values_[k] - values_[k - 1]);
}

std::vector<double> union_nodes(const PiecewiseLinearFunction& a,
                                const PiecewiseLinearFunction& b) {
  if (!(a.interval() == b.interval())) {
    throw DomainMismatchError("functions live on different intervals");
  }
  std::vector<double> out;
  out.reserve(a.node_count() + b.node_count());
  std::merge(a.nodes().begin(), a.nodes().end(), b.nodes().begin(), b.nodes().end(),
             std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> evaluate_on(const PiecewiseLinearFunction& f, std::span<const double> xs) {
  const auto& nodes = f.nodes();
  const auto& vals = f.values();
  std::vector<double> out;
  out.reserve(xs.size());
  std::size_t k = 0;  // current segment [nodes[k], nodes[k+1]]
  for (double x : xs) {
    while (k + 2 < nodes.size() && nodes[k + 1] <= x) ++k;
    if (x == nodes[k]) {
      out.push_back(vals[k]);
    } else if (x == nodes[k + 1]) {
      out.push_back(vals[k + 1]);
    } else {
      const double t = (x - nodes[k]) / (nodes[k + 1] - nodes[k]);
      out.push_back(vals[k] + t * (vals[k + 1] - vals[k]));
    }
  }
  return out;
}

PiecewiseLinearFunction combine(const PiecewiseLinearFunction& a, const PiecewiseLinearFunction& b,
                                double ca, double cb) {
  std::vector<double> xs = union_nodes(a, b);
  std::vector<double> va = evaluate_on(a, xs);
  std::vector<double> vb = evaluate_on(b, xs);
  std::vector<double> vals(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vals[i] = ca * va[i] + cb * vb[i];
  }
  return {std::move(xs), std::move(vals)};
}

PiecewiseLinearFunction shift(const PiecewiseLinearFunction& f, double dy) {
  std::vector<double> vals = f.values();
  for (double& v : vals) v += dy;
  return {f.nodes(), std::move(vals)};
}

PiecewiseLinearFunction scale(const PiecewiseLinearFunction& f, double c) {
  std::vector<double> vals = f.values();
  for (double& v : vals) v *= c;
  return {f.nodes(), std::move(vals)};
}

}  // namespace tautline
