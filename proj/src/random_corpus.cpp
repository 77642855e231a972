#include "tautline/random_corpus.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "tautline/analysis.hpp"
#include "tautline/errors.hpp"

namespace tautline {

double CorpusRng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double CorpusRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * unit();
}

double CorpusRng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

int CorpusRng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(unit() * (hi - lo + 1));
}

PiecewiseConstantSignal random_signal(CorpusRng& rng, int max_intervals, bool nonuniform_grid) {
  const int n = rng.uniform_int(2, max_intervals);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (double& v : values) v = rng.uniform(-10.0, 10.0);

  if (!nonuniform_grid) {
    return PiecewiseConstantSignal::uniform(Interval(0.0, n), std::move(values));
  }
  std::vector<double> bps(static_cast<std::size_t>(n) + 1);
  bps.front() = 0.0;
  bps.back() = static_cast<double>(n);
  for (std::size_t i = 1; i < bps.size() - 1; ++i) {
    bps[i] = rng.uniform(0.0, static_cast<double>(n));
  }
  std::sort(bps.begin(), bps.end());
  // Widen accidental near-collisions; exact duplicates are invalid breakpoints.
  for (std::size_t i = 1; i < bps.size(); ++i) {
    if (bps[i] - bps[i - 1] < 1e-6) bps[i] = bps[i - 1] + 1e-6;
  }
  return {std::move(bps), std::move(values)};
}

double random_lambda(CorpusRng& rng, const PiecewiseConstantSignal& f) {
  const double g = gnorm(f);
  if (!(g > 0)) {
    throw ParameterError("random_lambda needs a non-constant signal");
  }
  return rng.log_uniform(1e-3 * g, 2.0 * g);
}

Tube random_tube(CorpusRng& rng, int max_nodes) {
  const int n = rng.uniform_int(2, max_nodes);
  std::vector<double> xs(static_cast<std::size_t>(n) + 1);
  std::vector<double> lo(xs.size()), hi(xs.size());
  double y = rng.uniform(-2.0, 2.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = static_cast<double>(i);
    y += rng.uniform(-2.0, 2.0);
    lo[i] = y;
    hi[i] = y + rng.uniform(0.3, 3.0);
  }
  const double start = rng.uniform(lo.front(), hi.front());
  const double end = rng.uniform(lo.back(), hi.back());
  return {PiecewiseLinearFunction(xs, std::move(lo)), PiecewiseLinearFunction(xs, std::move(hi)),
          start, end};
}

}  // namespace tautline
