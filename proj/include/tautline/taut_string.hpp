#ifndef TAUTLINE_TAUT_STRING_HPP
#define TAUTLINE_TAUT_STRING_HPP

#include <string>
#include <vector>

#include "tautline/piecewise_constant_signal.hpp"
#include "tautline/piecewise_linear_function.hpp"
#include "tautline/signal_ops.hpp"
#include "tautline/tolerance.hpp"
#include "tautline/tube.hpp"

namespace tautline {

// Minimizer of (1/2) * integral of W'^2 over the tube, pinned at both ends.
// Knots appear only where the string contacts an obstacle, plus the two
// endpoints; between contacts the string is affine.
// Throws InfeasibleTubeError (naming the violating node) when the tube is
// empty or a pinned value falls outside the obstacles.
PiecewiseLinearFunction solve_tube(const Tube& tube);

// Closed contact interval [lo, hi]; lo == hi marks a single contact point.
struct ContactInterval {
  double lo;
  double hi;
};

// Maximal runs of grid nodes where |w - obstacle| <= tol * scale.
std::vector<ContactInterval> contact_intervals(const PiecewiseLinearFunction& w,
                                               const PiecewiseLinearFunction& obstacle,
                                               double tol_scaled);

struct DenoiseResult {
  double lambda;
  PiecewiseConstantSignal u;   // denoised signal, = W'
  PiecewiseLinearFunction w;   // taut string through the tube around F
  PiecewiseLinearFunction xi;  // dual certificate, (F - W) / lambda
  double j_u;                  // total variation of u
  double energy;               // lambda * J(u) + (1/2)||f - u||^2
  std::vector<ContactInterval> contact_upper;
  std::vector<ContactInterval> contact_lower;
};

// Total-variation denoising: u minimizes lambda*J(u) + (1/2)||f - u||^2.
// Pipeline: cumulative signal, tube of width lambda, taut string, derivative;
// the certificate xi = (F - W)/lambda satisfies xi(a) = xi(b) = 0,
// ||xi||_inf <= 1 and J(u) = <u, xi'>.
DenoiseResult rof_denoise(const PiecewiseConstantSignal& f, double lambda,
                          double tol = kDefaultTol);

struct CertificateVerdict {
  bool pointwise_identity;  // u = f - lambda * xi' on the refined grid
  bool certificate_bounds;  // xi(a) = xi(b) = 0 and ||xi||_inf <= 1 + tol
  bool pairing_matches;     // J(u) = <u, xi'> within tol * (1 + J(u))
  double identity_residual;
  double bound_excess;
  double pairing_residual;
  std::string detail;  // empty when ok
  bool ok() const { return pointwise_identity && certificate_bounds && pairing_matches; }
};

// Sufficient optimality check: any pair (u, xi) passing all three conditions
// is the unique minimizing pair for (f, lambda); no reference solve involved.
CertificateVerdict verify_certificate(const PiecewiseConstantSignal& f, double lambda,
                                      const PiecewiseConstantSignal& u,
                                      const PiecewiseLinearFunction& xi,
                                      double tol = kDefaultTol);

}  // namespace tautline

#endif  // TAUTLINE_TAUT_STRING_HPP
