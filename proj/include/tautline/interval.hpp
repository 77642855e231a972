#ifndef TAUTLINE_INTERVAL_HPP
#define TAUTLINE_INTERVAL_HPP

#include <cmath>
#include <string>

#include "tautline/errors.hpp"

namespace tautline {

// Open bounded interval (a, b).
struct Interval {
  double a;
  double b;

  Interval(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
      throw ParameterError("interval endpoints must be finite with a < b, got [" +
                           std::to_string(a_) + ", " + std::to_string(b_) + "]");
    }
  }

  double length() const { return b - a; }

  friend bool operator==(const Interval& lhs, const Interval& rhs) {
    return lhs.a == rhs.a && lhs.b == rhs.b;
  }
};

}  // namespace tautline

#endif  // TAUTLINE_INTERVAL_HPP
