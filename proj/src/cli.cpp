#include "tautline/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tautline/analysis.hpp"
#include "tautline/errors.hpp"
#include "tautline/isotonic.hpp"
#include "tautline/oracles.hpp"
#include "tautline/random_corpus.hpp"
#include "tautline/signal_io.hpp"
#include "tautline/signal_ops.hpp"
#include "tautline/taut_string.hpp"

namespace tautline::cli {

namespace {

// out.csv + "string" -> out.string.csv
std::string with_tag(const std::string& path, const std::string& tag) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return path + "." + tag + ".csv";
  }
  return path.substr(0, dot) + "." + tag + path.substr(dot);
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const io::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

nlohmann::json contacts_to_json(const std::vector<ContactInterval>& contacts) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : contacts) j.push_back({c.lo, c.hi});
  return j;
}

}  // namespace

double tolerance_from_env() {
  const char* raw = std::getenv("TAUTLINE_TOL");
  if (raw == nullptr || *raw == '\0') return kDefaultTol;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(tol > 0) || !std::isfinite(tol)) {
    throw ParameterError(std::string("TAUTLINE_TOL is not a positive number: '") + raw + "'");
  }
  return tol;
}

int cmd_denoise(const DenoiseOptions& opt) {
  return run_guarded([&]() {
    if (!(opt.lambda > 0) || !std::isfinite(opt.lambda)) {
      throw ParameterError("--lambda must be positive");
    }
    const PiecewiseConstantSignal f = io::read_signal(opt.input);
    const DenoiseResult result = rof_denoise(f, opt.lambda, opt.tol);
    io::write_signal(opt.output, result.u);
    if (opt.emit_string) {
      io::write_linear_function(with_tag(opt.output, "string"), result.w);
    }
    if (opt.emit_certificate) {
      io::write_linear_function(with_tag(opt.output, "certificate"), result.xi);
    }
    if (opt.emit_tube) {
      const PiecewiseLinearFunction F = cumulative(f);
      io::write_linear_function(with_tag(opt.output, "tube_lower"), shift(F, -opt.lambda));
      io::write_linear_function(with_tag(opt.output, "tube_upper"), shift(F, opt.lambda));
    }
    if (!opt.diagnostics.empty()) {
      const MeanZeroSplit split = mean_zero_split(f);
      const PiecewiseConstantSignal u0 = result.u - split.mean;
      const double primal = oracles::rof_energy(split.zero_mean, u0, opt.lambda);
      const double dual = oracles::dual_energy(split.zero_mean, result.xi, opt.lambda);
      nlohmann::json j;
      j["lambda"] = opt.lambda;
      j["j_f"] = total_variation(f);
      j["j_u"] = result.j_u;
      j["energy"] = result.energy;
      j["gnorm"] = gnorm(f);
      j["duality_gap_relative"] = (primal - dual) / std::max(1.0, primal);
      j["contact_upper"] = contacts_to_json(result.contact_upper);
      j["contact_lower"] = contacts_to_json(result.contact_lower);
      std::ofstream out(opt.diagnostics);
      if (!out) throw io::IoError("cannot open '" + opt.diagnostics + "' for writing");
      out << j.dump(2) << '\n';
      if (!out.good()) throw io::IoError("failed while writing '" + opt.diagnostics + "'");
    }
    return kExitOk;
  });
}

int cmd_isotonic(const IsotonicOptions& opt) {
  return run_guarded([&]() {
    const PiecewiseConstantSignal f = io::read_signal(opt.input);
    const IsotonicResult result = isotonic_fit(f);
    io::write_signal(opt.output, result.u);
    if (opt.emit_envelope) {
      io::write_linear_function(with_tag(opt.output, "envelope"), result.w);
      io::write_linear_function(with_tag(opt.output, "cumulative"), cumulative(f));
    }
    return kExitOk;
  });
}

int cmd_sweep(const SweepOptions& opt) {
  return run_guarded([&]() {
    if (!(opt.lambda_min > 0) || !(opt.lambda_max > opt.lambda_min)) {
      throw ParameterError("need 0 < --lambda-min < --lambda-max");
    }
    if (opt.count < 1) {
      throw ParameterError("--count must be at least 1");
    }
    if (opt.scale != "log" && opt.scale != "linear") {
      throw ParameterError("--scale must be 'log' or 'linear'");
    }
    const PiecewiseConstantSignal f = io::read_signal(opt.input);
    std::vector<double> lambdas(static_cast<std::size_t>(opt.count));
    if (opt.count == 1) {
      lambdas[0] = opt.lambda_min;
    } else {
      for (int i = 0; i < opt.count; ++i) {
        const double t = static_cast<double>(i) / (opt.count - 1);
        lambdas[static_cast<std::size_t>(i)] =
            opt.scale == "log"
                ? std::exp(std::log(opt.lambda_min) +
                           t * (std::log(opt.lambda_max) - std::log(opt.lambda_min)))
                : opt.lambda_min + t * (opt.lambda_max - opt.lambda_min);
      }
    }
    const LambdaSweep sweep = value_function_sweep(f, lambdas, opt.tol);
    std::ofstream out(opt.output);
    if (!out) throw io::IoError("cannot open '" + opt.output + "' for writing");
    out << "lambda,e,j_u,fidelity_sq,fidelity_sq_over_lambda\n";
    for (std::size_t i = 0; i < sweep.lambdas.size(); ++i) {
      out << io::format_double(sweep.lambdas[i]) << ',' << io::format_double(sweep.e_values[i])
          << ',' << io::format_double(sweep.j_values[i]) << ','
          << io::format_double(sweep.fidelity[i]) << ','
          << io::format_double(sweep.fidelity[i] / sweep.lambdas[i]) << '\n';
    }
    if (!out.good()) throw io::IoError("failed while writing '" + opt.output + "'");
    return kExitOk;
  });
}

namespace {

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

// The verdict battery over one signal; residuals are aggregated by the caller.
void run_battery(const PiecewiseConstantSignal& f, CorpusRng& rng, double tol,
                 std::vector<CheckLine>& lines) {
  auto add = [&lines](const std::string& name, bool pass, const std::string& detail) {
    lines.push_back({name, pass, detail});
  };

  const double g = gnorm(f);
  if (!(g > 0)) {
    add("equivalence", true, "constant signal, trivially denoised");
    return;
  }
  const double lambda = rng.log_uniform(1e-3 * g, 2.0 * g);
  const DenoiseResult res = rof_denoise(f, lambda, tol);

  {
    const PiecewiseConstantSignal qp_u = oracles::qp_tube_derivative(f, lambda, 1, 1e-11);
    const double err = l2_norm(res.u - qp_u);
    add("equivalence", err <= 1e-6, "L2 gap vs QP oracle " + io::format_double(err));
  }
  {
    const CertificateVerdict v = verify_certificate(f, lambda, res.u, res.xi, tol);
    add("certificate", v.ok(), v.ok() ? "optimality certified" : v.detail);
  }
  {
    // Detector sanity: a corrupted pair must be rejected with a named check.
    std::vector<double> vals = res.u.values();
    vals.front() += 0.1;
    const PiecewiseConstantSignal u_bad(res.u.breakpoints(), vals);
    const CertificateVerdict v = verify_certificate(f, lambda, u_bad, res.xi, tol);
    add("certificate_detector", !v.ok() && !v.pointwise_identity,
        v.ok() ? "corruption slipped through" : "rejected: " + v.detail);
  }
  {
    const FundamentalEstimateVerdict v = check_fundamental_estimate(f, lambda, tol);
    add("fundamental_estimate", v.ok(), v.ok() ? "jump bounds hold" : v.violation);
  }
  {
    bool pass = true;
    std::string detail = "thresholds match at gnorm multiples {0.5, 0.99, 1.0, 1.01}";
    for (double factor : {0.5, 0.99, 1.0, 1.01}) {
      const VanishingThresholdVerdict v = check_vanishing_threshold(f, factor * g, tol);
      if (!v.ok()) {
        pass = false;
        detail = "failed at lambda = " + io::format_double(factor * g);
        break;
      }
    }
    add("vanishing_threshold", pass, detail);
  }
  {
    std::vector<double> lambdas(16);
    for (int i = 0; i < 16; ++i) {
      const double t = i / 15.0;
      lambdas[static_cast<std::size_t>(i)] =
          std::exp(std::log(0.01 * g) + t * (std::log(2.0 * g) - std::log(0.01 * g)));
    }
    try {
      const LambdaSweep sweep = value_function_sweep(f, lambdas, tol);
      add("value_function", true,
          "monotone concave sweep, e(max) = " + io::format_double(sweep.e_values.back()));
      const BvConvergenceReport report = check_bv_convergence(f, lambdas, tol);
      add("bv_convergence", report.ok(),
          report.ok() ? "all rows satisfy the convergence bounds" : "a row violates a bound");
    } catch (const InvariantViolationError& e) {
      add("value_function", false, e.what());
    }
  }
  {
    const double mu = rng.log_uniform(1e-3 * g, 2.0 * g);
    const SemigroupVerdict v = check_semigroup(f, lambda, mu, tol);
    add("semigroup", v.ok(), "composition residual " + io::format_double(v.residual));
  }
  {
    const double mu = rng.uniform(0.05, 1.0) * lambda;
    const ReuseVerdict v = check_certificate_reuse(f, lambda, mu, tol);
    add("certificate_reuse", v.ok, "pairing residual " + io::format_double(v.residual));
  }
  {
    const Tube tube = Tube::around(cumulative(f), lambda);
    const PiecewiseLinearFunction taut = solve_tube(tube);
    const PiecewiseLinearFunction arc = oracles::convex_energy_solve_grid(
        oracles::discretize_tube(tube, 2), [](double s) { return s / std::sqrt(1.0 + s * s); },
        1e-9);
    double err = 0.0;
    const std::vector<double> taut_at = evaluate_on(taut, arc.nodes());
    for (std::size_t i = 0; i < arc.node_count(); ++i) {
      err = std::max(err, std::abs(taut_at[i] - arc.values()[i]));
    }
    add("shortest_path_equivalence", err <= 1e-4,
        "sup gap vs arc-length minimizer " + io::format_double(err));
  }
}

}  // namespace

int cmd_verify(const VerifyOptions& opt) {
  return run_guarded([&]() {
    if (opt.input.empty() == (opt.random_count == 0)) {
      throw ParameterError("pass exactly one of --input or --random");
    }
    if (opt.report.empty()) {
      throw ParameterError("--report is required");
    }

    CorpusRng rng(opt.seed);
    std::vector<CheckLine> lines;
    if (!opt.input.empty()) {
      const PiecewiseConstantSignal f = io::read_signal(opt.input);
      run_battery(f, rng, opt.tol, lines);
    } else {
      for (int i = 0; i < opt.random_count; ++i) {
        const PiecewiseConstantSignal f = random_signal(rng, 60, i % 2 == 1);
        run_battery(f, rng, opt.tol, lines);
      }
    }

    std::size_t failures = 0;
    std::ostringstream body;
    for (const CheckLine& line : lines) {
      if (!line.pass) ++failures;
      body << (line.pass ? "PASS" : "FAIL") << ' ' << line.name << ": " << line.detail << '\n';
    }
    body << (failures == 0 ? "RESULT all checks passed"
                           : "RESULT " + std::to_string(failures) + " check(s) failed")
         << " (" << lines.size() << " run)\n";

    std::ofstream out(opt.report);
    if (!out) throw io::IoError("cannot open '" + opt.report + "' for writing");
    out << body.str();
    if (!out.good()) throw io::IoError("failed while writing '" + opt.report + "'");
    return failures == 0 ? kExitOk : kExitCheckFailed;
  });
}

}  // namespace tautline::cli
