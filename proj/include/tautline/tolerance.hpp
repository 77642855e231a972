#ifndef TAUTLINE_TOLERANCE_HPP
#define TAUTLINE_TOLERANCE_HPP

namespace tautline {

// Global absolute tolerance for feasibility and contact tests. Exact
// floating-point arithmetic is used wherever sums/products of the inputs
// suffice; this only enters comparisons that are genuinely approximate.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace tautline

#endif  // TAUTLINE_TOLERANCE_HPP
