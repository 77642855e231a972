#include "tautline/tube.hpp"

#include <cmath>
#include <utility>

#include "tautline/errors.hpp"

namespace tautline {

Tube::Tube(std::optional<PiecewiseLinearFunction> lower_,
           std::optional<PiecewiseLinearFunction> upper_, double start, double end)
    : lower(std::move(lower_)), upper(std::move(upper_)), start_value(start), end_value(end) {
  if (!lower && !upper) {
    throw ParameterError("tube needs at least one obstacle");
  }
  if (lower && upper && !(lower->interval() == upper->interval())) {
    throw DomainMismatchError("tube obstacles live on different intervals");
  }
  if (!std::isfinite(start_value) || !std::isfinite(end_value)) {
    throw ParameterError("pinned tube values must be finite");
  }
}

Interval Tube::interval() const {
  return lower ? lower->interval() : upper->interval();
}

Tube Tube::around(const PiecewiseLinearFunction& center, double radius) {
  if (!(radius > 0) || !std::isfinite(radius)) {
    throw ParameterError("tube radius must be positive and finite");
  }
  return {shift(center, -radius), shift(center, radius), center.values().front(),
          center.values().back()};
}

Tube Tube::below(const PiecewiseLinearFunction& ceiling) {
  return {std::nullopt, ceiling, ceiling.values().front(), ceiling.values().back()};
}

}  // namespace tautline
