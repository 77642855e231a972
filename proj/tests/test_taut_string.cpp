#include <doctest.h>

#include <cmath>
#include <vector>

#include "tautline/errors.hpp"
#include "tautline/isotonic.hpp"
#include "tautline/oracles.hpp"
#include "tautline/random_corpus.hpp"
#include "tautline/signal_ops.hpp"
#include "tautline/taut_string.hpp"
#include "test_support.hpp"

using namespace tautline;
using testing::demo_signal;
using testing::sign_signal;
using testing::sup_diff;

namespace {

// Any feasible string whose upward kinks sit on the ceiling and downward
// kinks on the floor is the unique minimizer; checking this certifies the
// sweep's output exactly.
void require_string_optimal(const PiecewiseLinearFunction& w, const Tube& tube) {
  const double slack = 1e-9;

  if (tube.upper) {
    const std::vector<double> xs = union_nodes(w, *tube.upper);
    const std::vector<double> wv = evaluate_on(w, xs);
    const std::vector<double> ov = evaluate_on(*tube.upper, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) REQUIRE(wv[i] <= ov[i] + slack);
  }
  if (tube.lower) {
    const std::vector<double> xs = union_nodes(w, *tube.lower);
    const std::vector<double> wv = evaluate_on(w, xs);
    const std::vector<double> ov = evaluate_on(*tube.lower, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) REQUIRE(wv[i] >= ov[i] - slack);
  }
  REQUIRE(w.values().front() == tube.start_value);
  REQUIRE(w.values().back() == tube.end_value);

  for (std::size_t k = 1; k + 1 < w.node_count(); ++k) {
    const double slope_in =
        (w.values()[k] - w.values()[k - 1]) / (w.nodes()[k] - w.nodes()[k - 1]);
    const double slope_out =
        (w.values()[k + 1] - w.values()[k]) / (w.nodes()[k + 1] - w.nodes()[k]);
    if (slope_out > slope_in + slack) {
      REQUIRE(tube.upper);
      REQUIRE(std::abs(w.values()[k] - (*tube.upper)(w.nodes()[k])) <= slack);
    } else if (slope_out < slope_in - slack) {
      REQUIRE(tube.lower);
      REQUIRE(std::abs(w.values()[k] - (*tube.lower)(w.nodes()[k])) <= slack);
    }
  }
}

}  // namespace

TEST_CASE("taut string through the demo tube reproduces the known knots") {
  const Tube tube = Tube::around(cumulative(demo_signal()), 0.5);
  const PiecewiseLinearFunction w = solve_tube(tube);
  REQUIRE(w.node_count() == 4);
  CHECK(w.nodes() == std::vector<double>{0.0, 1.0, 3.0, 4.0});
  CHECK(w.values()[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.values()[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.values()[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.values()[3] == doctest::Approx(1.0).epsilon(1e-12));
  require_string_optimal(w, tube);
}

TEST_CASE("feasible chord solves the trivial tube") {
  const PiecewiseLinearFunction flat({0.0, 1.0, 2.0}, {0.0, 0.0, 0.0});
  const PiecewiseLinearFunction w = solve_tube(Tube::around(flat, 0.75));
  CHECK(w.node_count() == 2);
  CHECK(w.values() == std::vector<double>{0.0, 0.0});
}

TEST_CASE("sign tube at lambda 0.25 dips to the ceiling valley") {
  const Tube tube = Tube::around(cumulative(sign_signal()), 0.25);
  const PiecewiseLinearFunction w = solve_tube(tube);
  REQUIRE(w.node_count() == 3);
  CHECK(w.nodes()[1] == 0.0);
  CHECK(w.values()[1] == doctest::Approx(-0.75).epsilon(1e-12));
  require_string_optimal(w, tube);
}

TEST_CASE("infeasible tubes are rejected with the violating node") {
  const PiecewiseLinearFunction lo({0.0, 1.0, 2.0}, {0.0, 2.0, 0.0});
  const PiecewiseLinearFunction hi({0.0, 1.0, 2.0}, {1.0, 1.0, 1.0});
  CHECK_THROWS_AS(solve_tube(Tube(lo, hi, 0.5, 0.5)), InfeasibleTubeError);
  try {
    solve_tube(Tube(lo, hi, 0.5, 0.5));
  } catch (const InfeasibleTubeError& e) {
    CHECK(e.node_x() == 1.0);
  }

  // Pinned value outside the obstacles.
  const PiecewiseLinearFunction lo2({0.0, 2.0}, {0.0, 0.0});
  const PiecewiseLinearFunction hi2({0.0, 2.0}, {1.0, 1.0});
  CHECK_THROWS_AS(solve_tube(Tube(lo2, hi2, 5.0, 0.5)), InfeasibleTubeError);
}

TEST_CASE("one-sided tube reduces to the lower convex envelope") {
  CorpusRng rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const PiecewiseConstantSignal f = random_signal(rng, 40, trial % 2 == 0);
    const PiecewiseLinearFunction F = cumulative(f);
    const PiecewiseLinearFunction w = solve_tube(Tube::below(F));
    CHECK(sup_diff(w, lower_convex_envelope(F)) <= 1e-12 * std::max(1.0, linf_norm(F)));
  }
}

TEST_CASE("floor-only tube gives the concave majorant by reflection") {
  CorpusRng rng(4343);
  for (int trial = 0; trial < 25; ++trial) {
    const PiecewiseConstantSignal f = random_signal(rng, 30, trial % 2 == 0);
    const PiecewiseLinearFunction F = cumulative(f);
    const PiecewiseLinearFunction w =
        solve_tube(Tube(F, std::nullopt, F.values().front(), F.values().back()));
    const PiecewiseLinearFunction reflected = scale(lower_convex_envelope(scale(F, -1.0)), -1.0);
    CHECK(sup_diff(w, reflected) <= 1e-12 * std::max(1.0, linf_norm(F)));
  }
}

TEST_CASE("rof_denoise closed forms") {
  SUBCASE("sign below the threshold") {
    for (double lambda : {0.1, 0.5, 0.9}) {
      const DenoiseResult r = rof_denoise(sign_signal(), lambda);
      REQUIRE(r.u.interval_count() == 2);
      CHECK(r.u.values()[0] == doctest::Approx(-(1.0 - lambda)).epsilon(1e-14));
      CHECK(r.u.values()[1] == doctest::Approx(1.0 - lambda).epsilon(1e-14));
      const PiecewiseLinearFunction expected_xi({-1.0, 0.0, 1.0}, {0.0, -1.0, 0.0});
      CHECK(sup_diff(r.xi, expected_xi) <= 1e-14);
      CHECK(r.j_u == doctest::Approx(2.0 * (1.0 - lambda)).epsilon(1e-12));
      CHECK(linf_norm(r.xi) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("sign at and above the threshold flattens") {
    for (double lambda : {1.0, 1.5}) {
      const DenoiseResult r = rof_denoise(sign_signal(), lambda);
      CHECK(r.u.interval_count() == 1);
      CHECK(std::abs(r.u.values()[0]) <= 1e-14);
      const PiecewiseLinearFunction expected_xi({-1.0, 0.0, 1.0}, {0.0, -1.0 / lambda, 0.0});
      CHECK(sup_diff(r.xi, expected_xi) <= 1e-14);
    }
  }
  SUBCASE("demo signal at lambda 0.5") {
    const DenoiseResult r = rof_denoise(demo_signal(), 0.5);
    const PiecewiseConstantSignal expected =
        PiecewiseConstantSignal::uniform(Interval(0.0, 4.0), {1.0, -0.25, -0.25, 0.5});
    CHECK(sup_diff(r.u, expected) <= 1e-12);
    // The string touches the floor at x=1 and the ceiling at x=3.
    REQUIRE(!r.contact_lower.empty());
    REQUIRE(!r.contact_upper.empty());
    CHECK(r.contact_lower.front().lo == 1.0);
    CHECK(r.contact_upper.front().lo == 3.0);
  }
}

TEST_CASE("degenerate inputs") {
  const PiecewiseConstantSignal c = PiecewiseConstantSignal::constant({0.0, 3.0}, 2.5);
  for (double lambda : {1e-6, 1.0, 100.0}) {
    const DenoiseResult r = rof_denoise(c, lambda);
    CHECK(r.u == c);
    CHECK(linf_norm(r.xi) == 0.0);
    CHECK(r.j_u == 0.0);
  }
  CHECK_THROWS_AS(rof_denoise(c, 0.0), ParameterError);
  CHECK_THROWS_AS(rof_denoise(c, -1.0), ParameterError);
}

TEST_CASE("denoise results satisfy their invariants on random inputs") {
  CorpusRng rng(555);
  for (int trial = 0; trial < 120; ++trial) {
    const PiecewiseConstantSignal f = random_signal(rng, 80, trial % 2 == 0);
    const double lambda = random_lambda(rng, f);
    const DenoiseResult r = rof_denoise(f, lambda);

    // W = F - lambda*xi identically.
    const PiecewiseLinearFunction reconstructed =
        combine(cumulative(f), r.xi, 1.0, -lambda);
    CHECK(sup_diff(reconstructed, r.w) <= 1e-9);

    // u = W' and the certificate conditions.
    CHECK(sup_diff(r.u, derivative(r.w)) == 0.0);
    CHECK(verify_certificate(f, lambda, r.u, r.xi).ok());

    // Knot budget: contacts only, so at most one knot per breakpoint.
    CHECK(r.w.node_count() <= f.breakpoints().size());

    require_string_optimal(r.w, Tube::around(cumulative(f), lambda));

    // ||xi||_inf = 1 whenever the output is not constant.
    if (r.u.interval_count() > 1) {
      CHECK(linf_norm(r.xi) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("energy optimality against perturbed candidates") {
  CorpusRng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const PiecewiseConstantSignal f = random_signal(rng, 30, trial % 2 == 0);
    const double lambda = random_lambda(rng, f);
    const DenoiseResult r = rof_denoise(f, lambda);
    const double best = oracles::rof_energy(f, r.u, lambda);
    CHECK(best == doctest::Approx(r.energy).epsilon(1e-12));

    const double mean = mean_zero_split(f).mean;
    std::vector<PiecewiseConstantSignal> candidates{
        f, PiecewiseConstantSignal::constant(f.interval(), 0.0),
        PiecewiseConstantSignal::constant(f.interval(), mean)};
    for (int p = 0; p < 5; ++p) {
      std::vector<double> vals = r.u.values();
      for (double& v : vals) v += rng.uniform(-0.5, 0.5);
      candidates.emplace_back(r.u.breakpoints(), vals);
    }
    for (const auto& v : candidates) {
      const double dist = l2_norm(v - r.u);
      CHECK(oracles::rof_energy(f, v, lambda) - best >= 0.5 * dist * dist - 1e-9);
    }
  }
}

TEST_CASE("denoising is non-expansive and translation equivariant") {
  CorpusRng rng(909);
  for (int trial = 0; trial < 60; ++trial) {
    const PiecewiseConstantSignal f = random_signal(rng, 40, trial % 2 == 0);
    const double lambda = random_lambda(rng, f);

    std::vector<double> vals = f.values();
    for (double& v : vals) v += rng.uniform(-2.0, 2.0);
    const PiecewiseConstantSignal g(f.breakpoints(), vals);

    const PiecewiseConstantSignal uf = rof_denoise(f, lambda).u;
    const PiecewiseConstantSignal ug = rof_denoise(g, lambda).u;
    CHECK(l2_norm(ug - uf) <= l2_norm(g - f) + 1e-9);

    const double c = rng.uniform(-5.0, 5.0);
    const PiecewiseConstantSignal shifted = rof_denoise(f + c, lambda).u;
    CHECK(sup_diff(shifted, uf + c) <= 1e-9);
  }
}

TEST_CASE("verify_certificate flags corrupted pairs") {
  const PiecewiseConstantSignal f = demo_signal();
  const DenoiseResult r = rof_denoise(f, 0.5);

  SUBCASE("valid by construction") { CHECK(verify_certificate(f, 0.5, r.u, r.xi).ok()); }

  SUBCASE("zero certificate fails the pairing condition") {
    const PiecewiseLinearFunction zero({0.0, 4.0}, {0.0, 0.0});
    const CertificateVerdict v = verify_certificate(f, 0.5, f, zero);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.pairing_matches);
    CHECK(v.pointwise_identity);
  }

  SUBCASE("perturbed u fails the pointwise identity") {
    std::vector<double> vals = r.u.values();
    vals[0] += 0.1;
    const PiecewiseConstantSignal bad(r.u.breakpoints(), vals);
    const CertificateVerdict v = verify_certificate(f, 0.5, bad, r.xi);
    CHECK_FALSE(v.ok());
    CHECK_FALSE(v.pointwise_identity);
    CHECK(!v.detail.empty());
  }

  SUBCASE("oversized certificate fails the bounds") {
    const PiecewiseLinearFunction big({0.0, 2.0, 4.0}, {0.0, -1.5, 0.0});
    const CertificateVerdict v = verify_certificate(f, 0.5, r.u, big);
    CHECK_FALSE(v.certificate_bounds);
  }
}

TEST_CASE("contact sets are maximal runs on the refined grid") {
  // Pinched tube: the string must follow the obstacle over the middle span.
  const PiecewiseLinearFunction F({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, -1.0, 0.0});
  const Tube tube = Tube::around(F, 0.25);
  const PiecewiseLinearFunction w = solve_tube(tube);
  const auto upper = contact_intervals(w, *tube.upper, 1e-9);
  const auto lower = contact_intervals(w, *tube.lower, 1e-9);
  REQUIRE(!upper.empty());
  REQUIRE(!lower.empty());
  // Contact with the ceiling at its valley x=2, with the floor at its peak x=1.
  CHECK(lower.front().lo == 1.0);
  CHECK(lower.front().hi == 1.0);
  CHECK(upper.front().lo == 2.0);
  CHECK(upper.front().hi == 2.0);
}

TEST_CASE("random general tubes solve to certified optima") {
  CorpusRng rng(606);
  for (int trial = 0; trial < 80; ++trial) {
    const Tube tube = random_tube(rng, 50);
    const PiecewiseLinearFunction w = solve_tube(tube);
    require_string_optimal(w, tube);
  }
}

TEST_CASE("obstacles on different node grids refine to a common one") {
  CorpusRng rng(707);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform_int(3, 20);
    std::vector<double> lo_xs{0.0}, hi_xs{0.0};
    while (lo_xs.back() < n) lo_xs.push_back(lo_xs.back() + rng.uniform(0.2, 1.5));
    while (hi_xs.back() < lo_xs.back()) hi_xs.push_back(hi_xs.back() + rng.uniform(0.2, 1.5));
    hi_xs.back() = lo_xs.back();
    auto walk = [&rng](std::size_t count, double offset) {
      std::vector<double> ys(count);
      double y = offset;
      for (double& v : ys) {
        y += rng.uniform(-1.5, 1.5);
        v = y;
      }
      return ys;
    };
    const PiecewiseLinearFunction lower(lo_xs, walk(lo_xs.size(), -4.0));
    const PiecewiseLinearFunction upper_raw(hi_xs, walk(hi_xs.size(), 4.0));
    // Lift the ceiling above the floor everywhere on the union grid.
    const std::vector<double> xs = union_nodes(lower, upper_raw);
    const std::vector<double> lo_at = evaluate_on(lower, xs);
    const std::vector<double> up_at = evaluate_on(upper_raw, xs);
    double lift = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      lift = std::max(lift, lo_at[i] - up_at[i] + 0.5);
    }
    const PiecewiseLinearFunction upper = shift(upper_raw, lift);
    const double start = 0.5 * (lower.values().front() + upper.values().front());
    const double end = 0.5 * (lower.values().back() + upper.values().back());
    const Tube tube(lower, upper, start, end);
    const PiecewiseLinearFunction w = solve_tube(tube);
    require_string_optimal(w, tube);

    // Cross-check against the QP oracle on the same boxes.
    const PiecewiseLinearFunction qp =
        oracles::qp_solve(oracles::discretize_tube(tube, 1), 1e-11);
    const std::vector<double> w_at = evaluate_on(w, qp.nodes());
    for (std::size_t i = 0; i < qp.node_count(); ++i) {
      CHECK(std::abs(w_at[i] - qp.values()[i]) <= 1e-7);
    }
  }
}
