#include "tautline/isotonic.hpp"

#include <vector>

#include "tautline/signal_ops.hpp"

namespace tautline {

PiecewiseLinearFunction lower_convex_envelope(const PiecewiseLinearFunction& f) {
  const auto& xs = f.nodes();
  const auto& ys = f.values();
  // Monotone-chain lower hull over the nodes; equal slopes merge into one knot.
  std::vector<double> hx, hy;
  hx.reserve(xs.size());
  hy.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    while (hx.size() >= 2) {
      const std::size_t s = hx.size();
      // pop while slope(h[s-2], h[s-1]) >= slope(h[s-1], new)
      if ((hy[s - 1] - hy[s - 2]) * (xs[i] - hx[s - 1]) >=
          (ys[i] - hy[s - 1]) * (hx[s - 1] - hx[s - 2])) {
        hx.pop_back();
        hy.pop_back();
      } else {
        break;
      }
    }
    hx.push_back(xs[i]);
    hy.push_back(ys[i]);
  }
  return {std::move(hx), std::move(hy)};
}

IsotonicResult isotonic_fit(const PiecewiseConstantSignal& f) {
  PiecewiseLinearFunction w = lower_convex_envelope(cumulative(f));
  PiecewiseConstantSignal u = derivative(w);
  const double d = l2_norm(u - f);
  return {std::move(u), std::move(w), 0.5 * d * d};
}

PiecewiseConstantSignal pava_oracle(const PiecewiseConstantSignal& f) {
  const auto& bps = f.breakpoints();
  const auto& vals = f.values();
  struct Block {
    double value;
    double weight;
    std::size_t end;  // index one past the last pooled interval
  };
  std::vector<Block> blocks;
  blocks.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    Block b{vals[i], bps[i + 1] - bps[i], i + 1};
    while (!blocks.empty() && blocks.back().value > b.value) {
      const Block& prev = blocks.back();
      b.value = (prev.value * prev.weight + b.value * b.weight) / (prev.weight + b.weight);
      b.weight += prev.weight;
      blocks.pop_back();
    }
    blocks.push_back(b);
  }
  std::vector<double> out_bps{bps.front()};
  std::vector<double> out_vals;
  for (const Block& b : blocks) {
    out_vals.push_back(b.value);
    out_bps.push_back(bps[b.end]);
  }
  return {std::move(out_bps), std::move(out_vals)};
}

}  // namespace tautline
