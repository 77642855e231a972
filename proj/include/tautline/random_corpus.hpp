#ifndef TAUTLINE_RANDOM_CORPUS_HPP
#define TAUTLINE_RANDOM_CORPUS_HPP

#include <cstdint>
#include <random>

#include "tautline/piecewise_constant_signal.hpp"
#include "tautline/tube.hpp"

namespace tautline {

// Deterministic random source for test corpora and `verify --random`. Doubles
// are derived from raw engine words so runs are reproducible for a given seed
// independent of the standard library's distribution implementations.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds
  bool coin() { return (engine_() & 1u) != 0; }

 private:
  double unit();  // [0, 1)
  std::mt19937_64 engine_;
};

// Piecewise constant signal with 2..max_intervals intervals and values in
// [-10, 10]; non-uniform grids draw breakpoints from sorted uniforms.
PiecewiseConstantSignal random_signal(CorpusRng& rng, int max_intervals, bool nonuniform_grid);

// Log-uniform lambda in [1e-3 * gnorm(f), 2 * gnorm(f)].
double random_lambda(CorpusRng& rng, const PiecewiseConstantSignal& f);

// Random two-sided tube: piecewise linear floor plus a positive random width.
Tube random_tube(CorpusRng& rng, int max_nodes);

}  // namespace tautline

#endif  // TAUTLINE_RANDOM_CORPUS_HPP
