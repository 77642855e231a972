#ifndef TAUTLINE_ERRORS_HPP
#define TAUTLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tautline {

// Invalid argument to an operation (bad lambda, unsorted grids, ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Two signals/functions that must share an interval do not.
class DomainMismatchError : public std::invalid_argument {
 public:
  explicit DomainMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Tube (or box problem) admits no feasible string; carries the violating node.
class InfeasibleTubeError : public std::runtime_error {
 public:
  InfeasibleTubeError(const std::string& what, double node_x)
      : std::runtime_error(what), node_x_(node_x) {}
  double node_x() const { return node_x_; }

 private:
  double node_x_;
};

// An iterative oracle hit its sweep cap before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical invariant that should hold by construction failed.
class InvariantViolationError : public std::logic_error {
 public:
  explicit InvariantViolationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tautline

#endif  // TAUTLINE_ERRORS_HPP
