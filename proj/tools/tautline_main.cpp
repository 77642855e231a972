#include <iostream>

#include <CLI11.hpp>

#include "tautline/cli.hpp"
#include "tautline/errors.hpp"

int main(int argc, char** argv) {
  using namespace tautline::cli;

  CLI::App app{"1-D total-variation denoising via the taut string, with dual "
               "certificates, isotonic regression, value-function sweeps and "
               "self-verification"};
  app.require_subcommand(1);

  double tol;
  try {
    tol = tolerance_from_env();
  } catch (const tautline::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  DenoiseOptions denoise;
  denoise.tol = tol;
  auto* cmd_d = app.add_subcommand("denoise", "Denoise a piecewise constant signal");
  cmd_d->add_option("--input", denoise.input, "signal file (csv or json)")->required();
  cmd_d->add_option("--lambda", denoise.lambda, "regularization weight, > 0")->required();
  cmd_d->add_option("--output", denoise.output, "denoised signal file")->required();
  cmd_d->add_flag("--emit-string", denoise.emit_string, "also write the taut string nodes");
  cmd_d->add_flag("--emit-certificate", denoise.emit_certificate,
                  "also write the dual certificate nodes");
  cmd_d->add_flag("--emit-tube", denoise.emit_tube, "also write the tube boundaries F±lambda");
  cmd_d->add_option("--diagnostics", denoise.diagnostics,
                    "write a JSON record (J(f), J(u), energy, gnorm, duality gap, contacts)");

  IsotonicOptions isotonic;
  isotonic.tol = tol;
  auto* cmd_i = app.add_subcommand("isotonic", "Non-decreasing least-squares fit");
  cmd_i->add_option("--input", isotonic.input, "signal file (csv or json)")->required();
  cmd_i->add_option("--output", isotonic.output, "fitted signal file")->required();
  cmd_i->add_flag("--emit-envelope", isotonic.emit_envelope,
                  "also write the lower convex envelope and the cumulative signal");

  SweepOptions sweep;
  sweep.tol = tol;
  auto* cmd_s = app.add_subcommand("sweep", "Tabulate the value function over a lambda grid");
  cmd_s->add_option("--input", sweep.input, "signal file (csv or json)")->required();
  cmd_s->add_option("--lambda-min", sweep.lambda_min, "smallest lambda, > 0")->required();
  cmd_s->add_option("--lambda-max", sweep.lambda_max, "largest lambda")->required();
  cmd_s->add_option("--count", sweep.count, "number of grid points")->required();
  cmd_s->add_option("--scale", sweep.scale, "grid spacing: log or linear")
      ->check(CLI::IsMember({"log", "linear"}));
  cmd_s->add_option("--output", sweep.output, "CSV table destination")->required();

  VerifyOptions verify;
  verify.tol = tol;
  auto* cmd_v = app.add_subcommand("verify", "Run the verdict battery and write a report");
  cmd_v->add_option("--input", verify.input, "signal file to verify");
  cmd_v->add_option("--random", verify.random_count, "verify N seeded random signals instead");
  cmd_v->add_option("--seed", verify.seed, "random seed");
  cmd_v->add_option("--report", verify.report, "pass/fail report destination")->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_d->parsed()) return cmd_denoise(denoise);
  if (cmd_i->parsed()) return cmd_isotonic(isotonic);
  if (cmd_s->parsed()) return cmd_sweep(sweep);
  if (cmd_v->parsed()) return cmd_verify(verify);
  return kExitParameter;
}
