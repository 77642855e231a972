#include "tautline/piecewise_constant_signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tautline/errors.hpp"

namespace tautline {

PiecewiseConstantSignal::PiecewiseConstantSignal(std::vector<double> breakpoints,
                                                 std::vector<double> values) {
  if (breakpoints.size() < 2) {
    throw ParameterError("signal needs at least two breakpoints");
  }
  if (values.size() + 1 != breakpoints.size()) {
    throw ParameterError("signal needs exactly one value per interval, got " +
                         std::to_string(values.size()) + " values for " +
                         std::to_string(breakpoints.size()) + " breakpoints");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i])) {
      throw ParameterError("breakpoint " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(breakpoints[i - 1] < breakpoints[i])) {
      throw ParameterError("breakpoints must be strictly increasing at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ParameterError("value " + std::to_string(i) + " is not finite");
    }
  }

  breakpoints_.reserve(breakpoints.size());
  values_.reserve(values.size());
  breakpoints_.push_back(breakpoints.front());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values_.empty() && values[i] == values_.back()) {
      breakpoints_.back() = breakpoints[i + 1];  // extend previous interval
    } else {
      values_.push_back(values[i]);
      breakpoints_.push_back(breakpoints[i + 1]);
    }
  }
}

PiecewiseConstantSignal PiecewiseConstantSignal::uniform(const Interval& domain,
                                                          std::vector<double> values) {
  if (values.empty()) {
    throw ParameterError("uniform signal needs at least one value");
  }
  const std::size_t n = values.size();
  std::vector<double> bps(n + 1);
  const double h = domain.length() / static_cast<double>(n);
  for (std::size_t i = 0; i <= n; ++i) {
    bps[i] = domain.a + static_cast<double>(i) * h;
  }
  bps.back() = domain.b;
  return {std::move(bps), std::move(values)};
}

PiecewiseConstantSignal PiecewiseConstantSignal::constant(const Interval& domain, double value) {
  return {{domain.a, domain.b}, {value}};
}

double PiecewiseConstantSignal::value_at(double x) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx == 0) return values_.front();
  if (idx >= breakpoints_.size()) return values_.back();
  return values_[idx - 1];
}

PiecewiseConstantSignal PiecewiseConstantSignal::simplify(double eps) const {
  if (eps < 0) throw ParameterError("simplify tolerance must be nonnegative");
  std::vector<double> bps{breakpoints_.front()};
  std::vector<double> vals;
  double run_mass = 0.0;
  double run_length = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double len = breakpoints_[i + 1] - breakpoints_[i];
    if (!vals.empty() && std::abs(values_[i] - run_mass / run_length) <= eps) {
      run_mass += values_[i] * len;
      run_length += len;
      vals.back() = run_mass / run_length;
      bps.back() = breakpoints_[i + 1];
    } else {
      run_mass = values_[i] * len;
      run_length = len;
      vals.push_back(values_[i]);
      bps.push_back(breakpoints_[i + 1]);
    }
  }
  return {std::move(bps), std::move(vals)};
}

RefinedPair refine_pair(const PiecewiseConstantSignal& u, const PiecewiseConstantSignal& v) {
  if (!(u.interval() == v.interval())) {
    throw DomainMismatchError("signals live on different intervals");
  }
  const auto& bu = u.breakpoints();
  const auto& bv = v.breakpoints();
  RefinedPair out;
  out.breakpoints.reserve(bu.size() + bv.size());
  out.u.reserve(bu.size() + bv.size());
  out.v.reserve(bu.size() + bv.size());

  std::size_t iu = 0, iv = 0;  // index of current cell in each signal
  out.breakpoints.push_back(bu.front());
  while (true) {
    const double next_u = bu[iu + 1];
    const double next_v = bv[iv + 1];
    const double next = std::min(next_u, next_v);
    out.u.push_back(u.values()[iu]);
    out.v.push_back(v.values()[iv]);
    out.breakpoints.push_back(next);
    if (next == bu.back()) break;  // shared right endpoint reached on both grids
    if (next_u == next) ++iu;
    if (next_v == next) ++iv;
  }
  return out;
}

namespace {
PiecewiseConstantSignal combine_signals(const PiecewiseConstantSignal& u,
                                        const PiecewiseConstantSignal& v, double cu, double cv) {
  RefinedPair r = refine_pair(u, v);
  std::vector<double> vals(r.u.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    vals[i] = cu * r.u[i] + cv * r.v[i];
  }
  return {std::move(r.breakpoints), std::move(vals)};
}
}  // namespace

PiecewiseConstantSignal operator+(const PiecewiseConstantSignal& u,
                                  const PiecewiseConstantSignal& v) {
  return combine_signals(u, v, 1.0, 1.0);
}

PiecewiseConstantSignal operator-(const PiecewiseConstantSignal& u,
                                  const PiecewiseConstantSignal& v) {
  return combine_signals(u, v, 1.0, -1.0);
}

PiecewiseConstantSignal operator+(const PiecewiseConstantSignal& u, double c) {
  std::vector<double> vals = u.values();
  for (double& x : vals) x += c;
  return {u.breakpoints(), std::move(vals)};
}

PiecewiseConstantSignal operator-(const PiecewiseConstantSignal& u, double c) {
  return u + (-c);
}

PiecewiseConstantSignal operator*(double c, const PiecewiseConstantSignal& u) {
  std::vector<double> vals = u.values();
  for (double& x : vals) x *= c;
  return {u.breakpoints(), std::move(vals)};
}

}  // namespace tautline
