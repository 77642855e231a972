#include "tautline/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tautline/errors.hpp"
#include "tautline/signal_ops.hpp"

namespace tautline {

namespace {

double value_spread(const PiecewiseConstantSignal& u) {
  const auto [lo, hi] = std::minmax_element(u.values().begin(), u.values().end());
  return *hi - *lo;
}

double signal_scale(const PiecewiseConstantSignal& f) {
  double s = 1.0;
  for (double v : f.values()) s = std::max(s, std::abs(v));
  return s;
}

double sup_difference(const PiecewiseConstantSignal& u, const PiecewiseConstantSignal& v) {
  const RefinedPair r = refine_pair(u, v);
  double m = 0.0;
  for (std::size_t i = 0; i < r.u.size(); ++i) {
    m = std::max(m, std::abs(r.u[i] - r.v[i]));
  }
  return m;
}

}  // namespace

double gnorm(const PiecewiseConstantSignal& f) {
  return linf_norm(cumulative(mean_zero_split(f).zero_mean));
}

VanishingThresholdVerdict check_vanishing_threshold(const PiecewiseConstantSignal& f,
                                                    double lambda, double tol) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite");
  }
  VanishingThresholdVerdict v{};
  v.lambda = lambda;
  v.g = gnorm(f);
  const double scale = std::max(1.0, v.g);

  const DenoiseResult res = rof_denoise(f, lambda, tol);
  v.constancy_spread = value_spread(res.u);
  const bool is_constant = v.constancy_spread <= tol * std::max(1.0, signal_scale(f));
  const bool above_threshold = lambda >= v.g - tol * scale;
  v.constancy_matches = (is_constant == above_threshold);

  const PiecewiseConstantSignal f0 = mean_zero_split(f).zero_mean;
  const PiecewiseLinearFunction F0 = cumulative(f0);
  const PiecewiseLinearFunction W0 = rof_denoise(f0, lambda, tol).w;
  if (lambda < v.g) {
    v.tube_gap_residual = std::abs(linf_norm(combine(F0, W0, 1.0, -1.0)) - lambda);
    v.tube_gap_matches = v.tube_gap_residual <= tol * scale;
  } else {
    v.tube_gap_residual = 0.0;
    v.tube_gap_matches = true;
  }
  v.string_norm_residual = std::abs(linf_norm(W0) - std::max(0.0, v.g - lambda));
  v.string_norm_matches = v.string_norm_residual <= tol * scale;
  return v;
}

LambdaSweep value_function_sweep(const PiecewiseConstantSignal& f,
                                 const std::vector<double>& lambdas, double tol) {
  if (lambdas.empty()) {
    throw ParameterError("lambda sweep needs at least one value");
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0) || !std::isfinite(lambdas[i])) {
      throw ParameterError("sweep lambdas must be positive and finite");
    }
    if (i > 0 && !(lambdas[i - 1] < lambdas[i])) {
      throw ParameterError("sweep lambdas must be strictly increasing");
    }
  }

  LambdaSweep sweep;
  sweep.lambdas = lambdas;
  sweep.results.reserve(lambdas.size());
  for (double lambda : lambdas) {
    sweep.results.push_back(rof_denoise(f, lambda, tol));
    const DenoiseResult& r = sweep.results.back();
    sweep.e_values.push_back(r.energy);
    sweep.j_values.push_back(r.j_u);
    const double fid = r.energy - lambda * r.j_u;
    sweep.fidelity.push_back(2.0 * fid);
  }

  const double g = gnorm(f);
  const double j_f = total_variation(f);
  const PiecewiseConstantSignal f0 = mean_zero_split(f).zero_mean;
  const double half_norm0_sq = 0.5 * l2_inner(f0, f0);
  const double scale = std::max(1.0, *std::max_element(sweep.e_values.begin(), sweep.e_values.end()));

  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (i > 0 && sweep.e_values[i] < sweep.e_values[i - 1] - tol * scale) {
      throw InvariantViolationError("value function decreased between lambdas");
    }
    if (i + 2 < lambdas.size()) {
      const double d1 = (sweep.e_values[i + 1] - sweep.e_values[i]) / (lambdas[i + 1] - lambdas[i]);
      const double d2 =
          (sweep.e_values[i + 2] - sweep.e_values[i + 1]) / (lambdas[i + 2] - lambdas[i + 1]);
      if (d2 > d1 + tol * scale) {
        throw InvariantViolationError("value function is not concave across the sweep");
      }
    }
    if (lambdas[i] >= g && std::abs(sweep.e_values[i] - half_norm0_sq) > tol * scale) {
      throw InvariantViolationError("value function misses its plateau above the G-norm");
    }
    if (sweep.e_values[i] > lambdas[i] * j_f + tol * scale) {
      throw InvariantViolationError("value function exceeds lambda * J(f)");
    }
    if (i > 0) {
      if (sweep.j_values[i] > sweep.j_values[i - 1] + tol * scale) {
        throw InvariantViolationError("J(u_lambda) increased along the sweep");
      }
      if (sweep.fidelity[i] < sweep.fidelity[i - 1] - tol * scale) {
        throw InvariantViolationError("fidelity decreased along the sweep");
      }
    }
  }
  return sweep;
}

FundamentalEstimateVerdict check_fundamental_estimate(const PiecewiseConstantSignal& f,
                                                      double lambda, double tol) {
  if (!(lambda > 0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be positive and finite");
  }
  FundamentalEstimateVerdict v{true, true, true, ""};
  const AtomicMeasure mu_f = jump_measure(f);
  const AtomicMeasure mu_u = jump_measure(rof_denoise(f, lambda, tol).u);
  const double scale = signal_scale(f);
  for (const auto& atom : mu_u.atoms()) {
    const double f_mass = mu_f.mass_at(atom.location);
    if (f_mass == 0.0) {
      v.support_contained = false;
      v.violation = "jump of u at x = " + std::to_string(atom.location) + " has no jump of f";
      break;
    }
    if (atom.mass * f_mass < 0.0) {
      v.signs_match = false;
      v.violation = "jump signs differ at x = " + std::to_string(atom.location);
      break;
    }
    if (std::abs(atom.mass) > std::abs(f_mass) + tol * scale) {
      v.magnitudes_dominated = false;
      v.violation = "jump of u exceeds jump of f at x = " + std::to_string(atom.location);
      break;
    }
  }
  return v;
}

BvConvergenceReport check_bv_convergence(const PiecewiseConstantSignal& f,
                                         const std::vector<double>& lambdas, double tol) {
  BvConvergenceReport report;
  report.j_f = total_variation(f);
  const double scale = std::max(1.0, report.j_f);
  for (double lambda : lambdas) {
    const DenoiseResult r = rof_denoise(f, lambda, tol);
    BvConvergenceRow row{};
    row.lambda = lambda;
    const double d = l2_norm(f - r.u);
    row.fidelity_sq = d * d;
    row.j_u = r.j_u;
    row.bound = 2.0 * lambda * (report.j_f - r.j_u);
    row.tv_identity_residual = std::abs(total_variation(f - r.u) - (report.j_f - r.j_u));
    row.ratio = row.fidelity_sq / lambda;
    row.ok = row.fidelity_sq <= row.bound + tol * scale && row.j_u <= report.j_f + tol * scale &&
             row.tv_identity_residual <= tol * scale;
    report.rows.push_back(row);
  }
  return report;
}

bool BvConvergenceReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BvConvergenceRow& r) { return r.ok; });
}

RateVerdict check_piecewise_constant_rate(const PiecewiseConstantSignal& f, double lambda1,
                                          double lambda2, double tol) {
  if (!(0 < lambda1 && lambda1 < lambda2)) {
    throw ParameterError("need 0 < lambda1 < lambda2");
  }
  const PiecewiseConstantSignal q1 = (1.0 / lambda1) * (f - rof_denoise(f, lambda1).u);
  const PiecewiseConstantSignal q2 = (1.0 / lambda2) * (f - rof_denoise(f, lambda2).u);
  const double residual = sup_difference(q1, q2);
  return {residual <= tol, residual, lambda1, lambda2};
}

FrozenCertificateProbe probe_frozen_certificate(const PiecewiseConstantSignal& f, double tol) {
  const double g = gnorm(f);
  if (g == 0.0) {
    return {true, 0.0, 0.0, 0.0};  // constant signal: quotients are identically zero
  }
  const double floor = 1e-8 * g;
  for (double probe = 0.5 * g; probe >= floor; probe *= 0.5) {
    const RateVerdict v = check_piecewise_constant_rate(f, 0.5 * probe, probe, tol);
    if (v.ok) {
      return {true, v.lambda1, v.lambda2, v.residual};
    }
  }
  return {false, 0.0, 0.0, 0.0};
}

SemigroupVerdict check_semigroup(const PiecewiseConstantSignal& f, double lambda, double mu,
                                 double tol) {
  if (lambda < 0 || mu < 0 || !std::isfinite(lambda) || !std::isfinite(mu)) {
    throw ParameterError("semigroup parameters must be nonnegative and finite");
  }
  if (lambda + mu == 0.0) {
    return {true, true, 0.0};  // u_0 = f on both routes
  }

  const PiecewiseLinearFunction zero_xi({f.interval().a, f.interval().b}, {0.0, 0.0});
  PiecewiseConstantSignal u_lambda = f;
  PiecewiseLinearFunction xi_lambda = zero_xi;
  if (lambda > 0) {
    DenoiseResult first = rof_denoise(f, lambda, tol);
    u_lambda = std::move(first.u);
    xi_lambda = std::move(first.xi);
  }
  PiecewiseConstantSignal u_two_step = u_lambda;
  PiecewiseLinearFunction xi_mu = zero_xi;
  if (mu > 0) {
    DenoiseResult second = rof_denoise(u_lambda, mu, tol);
    u_two_step = std::move(second.u);
    xi_mu = std::move(second.xi);
  }
  const DenoiseResult direct = rof_denoise(f, lambda + mu, tol);

  SemigroupVerdict v{};
  v.residual = l2_norm(u_two_step - direct.u);
  const double scale = std::max(1.0, l2_norm(f));
  v.composition_matches = v.residual <= tol * scale;

  const PiecewiseLinearFunction averaged =
      combine(xi_lambda, xi_mu, lambda / (lambda + mu), mu / (lambda + mu));
  v.certificate_valid = verify_certificate(f, lambda + mu, u_two_step, averaged, tol).ok();
  return v;
}

ReuseVerdict check_certificate_reuse(const PiecewiseConstantSignal& f, double lambda, double mu,
                                     double tol) {
  if (!(0 < mu && mu <= lambda)) {
    throw ParameterError("need 0 < mu <= lambda");
  }
  const DenoiseResult at_lambda = rof_denoise(f, lambda, tol);
  const PiecewiseLinearFunction xi_mu = rof_denoise(f, mu, tol).xi;
  const double residual =
      std::abs(at_lambda.j_u - pairing_with_certificate(at_lambda.u, xi_mu));
  return {residual <= tol * (1.0 + at_lambda.j_u), residual};
}

}  // namespace tautline
