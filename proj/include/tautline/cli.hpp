#ifndef TAUTLINE_CLI_HPP
#define TAUTLINE_CLI_HPP

#include <cstdint>
#include <string>

#include "tautline/tolerance.hpp"

namespace tautline::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitParameter = 4;

struct DenoiseOptions {
  std::string input;
  std::string output;
  double lambda = 0.0;
  bool emit_string = false;
  bool emit_certificate = false;
  bool emit_tube = false;
  std::string diagnostics;  // empty: no record
  double tol = kDefaultTol;
};
int cmd_denoise(const DenoiseOptions& opt);

struct IsotonicOptions {
  std::string input;
  std::string output;
  bool emit_envelope = false;
  double tol = kDefaultTol;
};
int cmd_isotonic(const IsotonicOptions& opt);

struct SweepOptions {
  std::string input;
  std::string output;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int count = 0;
  std::string scale = "log";  // log | linear
  double tol = kDefaultTol;
};
int cmd_sweep(const SweepOptions& opt);

struct VerifyOptions {
  std::string input;       // mutually exclusive with random_count > 0
  int random_count = 0;
  std::uint64_t seed = 0;
  std::string report;
  double tol = kDefaultTol;
};
int cmd_verify(const VerifyOptions& opt);

// Tolerance override from TAUTLINE_TOL; throws ParameterError on junk.
double tolerance_from_env();

}  // namespace tautline::cli

#endif  // TAUTLINE_CLI_HPP
