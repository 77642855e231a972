#ifndef TAUTLINE_ANALYSIS_HPP
#define TAUTLINE_ANALYSIS_HPP

#include <string>
#include <vector>

#include "tautline/piecewise_constant_signal.hpp"
#include "tautline/taut_string.hpp"
#include "tautline/tolerance.hpp"

namespace tautline {

// Meyer G-norm of f: sup norm of the cumulative signal of the mean-zero part.
// Denoising returns a constant exactly when lambda reaches this value.
double gnorm(const PiecewiseConstantSignal& f);

// u_lambda is constant iff lambda >= gnorm(f); below the threshold the string
// presses against the tube ( ||F0 - W0||_inf = lambda ) and
// ||W0||_inf = gnorm - lambda. All three parts checked on the mean-zero part.
struct VanishingThresholdVerdict {
  double lambda;
  double g;  // gnorm(f)
  bool constancy_matches;        // (a)
  bool tube_gap_matches;         // (b), vacuous when lambda >= g
  bool string_norm_matches;      // (c)
  double constancy_spread;       // max - min of u's values
  double tube_gap_residual;      // | ||F0-W0||_inf - lambda |
  double string_norm_residual;   // | ||W0||_inf - max(0, g - lambda) |
  bool ok() const { return constancy_matches && tube_gap_matches && string_norm_matches; }
};
VanishingThresholdVerdict check_vanishing_threshold(const PiecewiseConstantSignal& f,
                                                    double lambda, double tol = kDefaultTol);

// Sweep of the value function e(lambda) = min E_lambda. Construction verifies
// that e is nondecreasing and concave, plateaus at (1/2)||f0||^2 above the
// G-norm, and obeys e(lambda) <= lambda * J(f); violations throw
// InvariantViolationError.
struct LambdaSweep {
  std::vector<double> lambdas;
  std::vector<DenoiseResult> results;
  std::vector<double> e_values;  // e(lambda)
  std::vector<double> j_values;  // J(u_lambda)
  std::vector<double> fidelity;  // ||f - u_lambda||^2
};
LambdaSweep value_function_sweep(const PiecewiseConstantSignal& f,
                                 const std::vector<double>& lambdas, double tol = kDefaultTol);

// Atomic-measure form of -(f')^- <= u_lambda' <= (f')^+ : jumps of u sit only
// at jumps of f, with matching sign and no larger magnitude.
struct FundamentalEstimateVerdict {
  bool support_contained;
  bool signs_match;
  bool magnitudes_dominated;
  std::string violation;  // empty when ok
  bool ok() const { return support_contained && signs_match && magnitudes_dominated; }
};
FundamentalEstimateVerdict check_fundamental_estimate(const PiecewiseConstantSignal& f,
                                                      double lambda, double tol = kDefaultTol);

// Per-lambda convergence facts: ||u-f||^2 <= 2*lambda*(J(f)-J(u)),
// J(u) <= J(f), and J(f-u) = J(f) - J(u); the ratio column supports decay
// inspection as lambda -> 0.
struct BvConvergenceRow {
  double lambda;
  double fidelity_sq;           // ||u - f||^2
  double bound;                 // 2*lambda*(J(f) - J(u))
  double j_u;
  double tv_identity_residual;  // | J(f-u) - (J(f) - J(u)) |
  double ratio;                 // ||u - f||^2 / lambda
  bool ok;
};
struct BvConvergenceReport {
  double j_f;
  std::vector<BvConvergenceRow> rows;
  bool ok() const;
};
BvConvergenceReport check_bv_convergence(const PiecewiseConstantSignal& f,
                                         const std::vector<double>& lambdas,
                                         double tol = kDefaultTol);

// Frozen-certificate regime: for small lambda the quotient (f - u_lambda)/lambda
// is lambda-independent.
struct RateVerdict {
  bool ok;
  double residual;  // sup | (f-u_1)/l1 - (f-u_2)/l2 |
  double lambda1;
  double lambda2;
};
RateVerdict check_piecewise_constant_rate(const PiecewiseConstantSignal& f, double lambda1,
                                          double lambda2, double tol = 1e-8);

// Halve a probe lambda from gnorm/2 down until the quotients stabilize; gives
// up (conclusive = false) at 1e-8 * gnorm.
struct FrozenCertificateProbe {
  bool conclusive;
  double lambda1;
  double lambda2;
  double residual;
};
FrozenCertificateProbe probe_frozen_certificate(const PiecewiseConstantSignal& f,
                                                double tol = 1e-8);

// Denoising with lambda then mu equals denoising once with lambda + mu; the
// averaged certificate (lambda*xi_lambda + mu*xi_mu) / (lambda+mu) certifies
// the composed solution.
struct SemigroupVerdict {
  bool composition_matches;
  bool certificate_valid;
  double residual;  // || (u_lambda)_mu - u_{lambda+mu} ||_{L2}
  bool ok() const { return composition_matches && certificate_valid; }
};
SemigroupVerdict check_semigroup(const PiecewiseConstantSignal& f, double lambda, double mu,
                                 double tol = kDefaultTol);

// J(u_lambda) = <u_lambda, xi_mu'> for any 0 < mu <= lambda.
struct ReuseVerdict {
  bool ok;
  double residual;
};
ReuseVerdict check_certificate_reuse(const PiecewiseConstantSignal& f, double lambda, double mu,
                                     double tol = kDefaultTol);

}  // namespace tautline

#endif  // TAUTLINE_ANALYSIS_HPP
