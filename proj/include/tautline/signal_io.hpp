#ifndef TAUTLINE_SIGNAL_IO_HPP
#define TAUTLINE_SIGNAL_IO_HPP

#include <stdexcept>
#include <string>

#include "tautline/piecewise_constant_signal.hpp"
#include "tautline/piecewise_linear_function.hpp"

namespace tautline::io {

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed signal file; messages carry line numbers for CSV input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Reads a signal file. `.json` files use
//   {"interval":[a,b], "breakpoints":[...], "values":[...]}
// and anything else is CSV: either header `value` with one value per line
// (uniform grid on [0, n]) or header `x,value` where row i carries
// breakpoint x_{i-1} and the value on (x_{i-1}, x_i), closed by a final row
// `x,` holding only x_n.
PiecewiseConstantSignal read_signal(const std::string& path);

// Writes in the format implied by the extension (JSON for `.json`, explicit
// grid CSV otherwise). Numbers carry 17 significant digits.
void write_signal(const std::string& path, const PiecewiseConstantSignal& f);

// Plot-ready `x,y` node list.
void write_linear_function(const std::string& path, const PiecewiseLinearFunction& f);

std::string format_double(double x);

}  // namespace tautline::io

#endif  // TAUTLINE_SIGNAL_IO_HPP
