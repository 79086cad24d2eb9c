#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "qse/amplitude_estimation.hpp"
#include "qse/error.hpp"
#include "qse/rng.hpp"
#include "qse/sampler.hpp"
#include "qse/stream.hpp"
#include "qse/suffix_estimator.hpp"

using namespace qse;

namespace {

constexpr double kPi = std::numbers::pi;

double ball_radius(double nu, std::uint64_t grid) {
  double md = static_cast<double>(grid);
  return 2.0 * kPi * std::sqrt(nu * (1.0 - nu)) / md + kPi * kPi / (md * md);
}

// Mass the outcome law puts within the confidence ball around nu.
double in_ball_mass(double nu, std::uint64_t grid) {
  auto p = qae_outcome_distribution(nu, grid);
  double ball = ball_radius(nu, grid);
  double mass = 0.0;
  for (std::uint64_t y = 0; y < grid; ++y)
    if (std::abs(estimate_from_outcome(y, grid) - nu) <= ball) mass += p[y];
  return mass;
}

// Upper tail P[Bin(n, p) >= k0], summed in log space.
double binomial_tail(std::uint64_t n, std::uint64_t k0, double p) {
  double total = 0.0;
  for (std::uint64_t k = k0; k <= n; ++k) {
    double lg = std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) -
                std::lgamma(double(n - k) + 1) + double(k) * std::log(p) +
                double(n - k) * std::log1p(-p);
    total += std::exp(lg);
  }
  return total;
}

SamplerDistribution constant_sampler(double value, std::uint64_t m) {
  SamplerDistribution d;
  d.kind = SamplerKind::case1_full;
  d.m = m;
  d.entries.push_back({1, 1.0, value});
  return d;
}

}  // namespace

TEST_SUITE("qae") {

TEST_CASE("value rescaling and its inverse") {
  double a = kLog2E;
  double b = 10.0;
  CHECK(scale_value(-a, a, b) == 0.0);
  CHECK(scale_value(b, a, b) == 1.0);
  CHECK(scale_value(1.5, a, 2.0) ==
        doctest::Approx((1.5 + kLog2E) / (kLog2E + 2.0)).epsilon(1e-15));
  for (double x : {-1.4, -0.5, 0.0, 0.3, 1.0, 4.2, 9.99}) {
    CHECK(unscale_value(scale_value(x, a, b), a, b) ==
          doctest::Approx(x).epsilon(1e-12));
  }
  CHECK_THROWS_AS(scale_value(b + 0.001, a, b), DomainError);
  CHECK_THROWS_AS(scale_value(-a - 0.001, a, b), DomainError);
  CHECK_THROWS_AS(unscale_value(-0.001, a, b), DomainError);
  CHECK_THROWS_AS(unscale_value(1.001, a, b), DomainError);
  CHECK_THROWS_AS(scale_value(0.0, -1.0, 1.0), DomainError);
}

TEST_CASE("outcome law at amplitudes with exact grid alignment") {
  auto p0 = qae_outcome_distribution(0.0, 8);
  CHECK(p0[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (std::uint64_t y = 1; y < 8; ++y) CHECK(p0[y] == doctest::Approx(0.0).epsilon(1e-12));

  auto p1 = qae_outcome_distribution(1.0, 4);
  CHECK(p1[2] == doctest::Approx(1.0).epsilon(1e-12));

  auto ph = qae_outcome_distribution(0.5, 4);
  CHECK(ph[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ph[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ph[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ph[2] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("outcome law is a distribution and mirror symmetric") {
  for (std::uint64_t grid : {2ull, 4ull, 16ull, 64ull, 256ull}) {
    for (int i = 0; i <= 20; ++i) {
      double nu = double(i) / 20.0;
      auto p = qae_outcome_distribution(nu, grid);
      double total = std::accumulate(p.begin(), p.end(), 0.0);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      for (std::uint64_t y = 1; y < grid; ++y)
        CHECK(p[y] == doctest::Approx(p[grid - y]).epsilon(1e-12));
      for (double v : p) CHECK(v >= -1e-15);
    }
  }
  CHECK_THROWS_AS(qae_outcome_distribution(-0.1, 8), DomainError);
  CHECK_THROWS_AS(qae_outcome_distribution(1.1, 8), DomainError);
  CHECK_THROWS_AS(qae_outcome_distribution(0.5, 3), DomainError);
  CHECK_THROWS_AS(qae_outcome_distribution(0.5, 0), DomainError);
}

TEST_CASE("mirrored outcomes decode to bit-identical estimates") {
  for (std::uint64_t grid : {4ull, 32ull, 256ull}) {
    CHECK(estimate_from_outcome(0, grid) == 0.0);
    for (std::uint64_t y = 1; y < grid; ++y) {
      CHECK(estimate_from_outcome(y, grid) ==
            estimate_from_outcome(grid - y, grid));
    }
  }
  CHECK(estimate_from_outcome(2, 4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(estimate_from_outcome(1, 4) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(estimate_from_outcome(4, 4), DomainError);
}

TEST_CASE("sampling follows the law at its point masses") {
  auto rng = make_rng(7);
  for (int i = 0; i < 200; ++i) {
    auto o = qae_sample(0.0, 8, rng);
    CHECK(o.y == 0);
    CHECK(o.estimate == 0.0);
  }
  for (int i = 0; i < 200; ++i) {
    auto o = qae_sample(0.5, 4, rng);
    CHECK((o.y == 1 || o.y == 3));
    CHECK(o.estimate == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  auto r1 = make_rng(123);
  auto r2 = make_rng(123);
  for (int i = 0; i < 50; ++i) {
    auto a = qae_sample(0.3, 64, r1);
    auto b = qae_sample(0.3, 64, r2);
    CHECK(a.y == b.y);
    CHECK(a.estimate == b.estimate);
  }
}

TEST_CASE("most samples land inside the confidence ball") {
  double nu = 0.3;
  std::uint64_t grid = 64;
  double ball = ball_radius(nu, grid);
  auto rng = make_rng(2026);
  int inside = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    auto o = qae_sample(nu, grid, rng);
    if (std::abs(o.estimate - nu) <= ball) ++inside;
  }
  CHECK(double(inside) / trials >= 0.81);
}

TEST_CASE("in-ball mass never drops below eight over pi squared") {
  const double floor = 8.0 / (kPi * kPi);
  for (std::uint64_t grid : {16ull, 64ull}) {
    for (int i = 0; i <= 40; ++i) {
      double nu = double(i) / 40.0;
      CHECK(in_ball_mass(nu, grid) >= floor);
    }
    // Amplitudes aligned to land exactly between grid points stress the bound.
    for (int k = 1; k < 8; ++k) {
      double omega = (double(k) + 0.5) / double(grid);
      double s = std::sin(kPi * omega);
      CHECK(in_ball_mass(s * s, grid) >= floor);
    }
  }
}

TEST_CASE("grid and repetition counts come out of the sizing rule") {
  auto p = choose_parameters(0.1, 1024, 1.0, 0.2);
  CHECK(p.t == 168);
  CHECK(p.grid == 256);
  CHECK(p.repetitions == 21);

  CHECK(choose_parameters(0.1, 1024, 1.0, 0.5).repetitions == 11);
  CHECK(choose_parameters(0.1, 1024, 1.0, 0.05).repetitions == 37);
  CHECK(choose_parameters(0.1, 1024, 1.0, 0.01).repetitions == 57);

  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    for (std::uint64_t m : {64ull, 1024ull, 65536ull}) {
      for (double e_lower : {1.0, 2.0}) {
        auto q = choose_parameters(eps, m, e_lower, 0.2);
        double a = kLog2E;
        double b = std::log2(double(m));
        double nu_lower = (e_lower + a) / (a + b);
        double eps_tilde = eps * e_lower / (e_lower + a);
        auto t = std::uint64_t(std::ceil(kPi / (eps_tilde * std::sqrt(nu_lower)))) + 1;
        CHECK(q.t == t);
        CHECK(q.grid == std::bit_ceil(t));
        CHECK(std::has_single_bit(q.grid));
        CHECK(q.repetitions % 2 == 1);
      }
    }
  }
}

TEST_CASE("halving the accuracy target at least doubles the walk length") {
  for (double eps : {0.4, 0.2, 0.1}) {
    auto coarse = choose_parameters(eps, 1024, 1.0, 0.2);
    auto fine = choose_parameters(eps / 2.0, 1024, 1.0, 0.2);
    CHECK(fine.t >= 2 * (coarse.t - 1));
    CHECK(fine.grid >= coarse.grid);
  }
  CHECK(choose_parameters(0.05, 1024, 1.0, 0.2).grid == 512);
}

TEST_CASE("sizing rule rejects out-of-range requests") {
  CHECK_THROWS_AS(choose_parameters(0.0, 1024, 1.0, 0.2), DomainError);
  CHECK_THROWS_AS(choose_parameters(1.0, 1024, 1.0, 0.2), DomainError);
  CHECK_THROWS_AS(choose_parameters(0.1, 1024, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(choose_parameters(0.1, 1024, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(choose_parameters(0.1, 1, 1.0, 0.2), DomainError);
  CHECK_THROWS_AS(choose_parameters(0.1, 1024, 0.5, 0.2), DomainError);
  CHECK_THROWS_AS(choose_parameters(0.1, 2, 1.5, 0.2), DomainError);
}

TEST_CASE("repetition count drives the failure probability below target") {
  // A single run misses the ball with probability at most 1 - 8/pi^2; the
  // median misses only when at least half the runs do.
  double p_out = 1.0 - 8.0 / (kPi * kPi);
  for (double delta : {0.5, 0.2, 0.05, 0.01}) {
    std::uint64_t r = choose_parameters(0.1, 1024, 1.0, delta).repetitions;
    CHECK(binomial_tail(r, (r + 1) / 2, p_out) <= delta);
  }
}

TEST_CASE("median estimate recovers a deterministic sampler exactly") {
  auto est = median_relative_estimate(constant_sampler(10.0, 1024), 0.1, 0.2, 5);
  CHECK(est.estimate == doctest::Approx(10.0).epsilon(1e-12));
  auto zero = median_relative_estimate(constant_sampler(-kLog2E, 1024), 0.1, 0.2, 5);
  CHECK(zero.estimate == doctest::Approx(-kLog2E).epsilon(1e-12));
}

TEST_CASE("median estimate hits the advertised accuracy rate") {
  Stream s = make_stream({1, 2, 1, 4});
  auto sampler = build_sampler(s, SamplerKind::case1_full);
  double target = 1.5;
  int hits = 0;
  const int seeds = 200;
  for (int i = 0; i < seeds; ++i) {
    auto est = median_relative_estimate(sampler, 0.1, 0.2, derive_seed(99, i));
    if (std::abs(est.estimate - target) <= 0.1 * target) ++hits;
  }
  CHECK(hits >= 140);  // guarantee is 160 of 200 in expectation
}

TEST_CASE("median estimate is reproducible and audited") {
  Stream s = make_stream({1, 2, 1, 4});
  auto sampler = build_sampler(s, SamplerKind::case1_full);
  auto a = median_relative_estimate(sampler, 0.1, 0.2, 31337);
  auto b = median_relative_estimate(sampler, 0.1, 0.2, 31337);
  CHECK(a.estimate == b.estimate);
  CHECK(a.outcome.y == b.outcome.y);

  auto params = choose_parameters(0.1, 4, 1.0, 0.2);
  CHECK(a.outcome.repetitions.size() == params.repetitions);
  CHECK(a.ledger.a_executions == params.repetitions * (2 * params.grid + 1));
  CHECK(a.ledger.oracle_calls == a.ledger.a_executions);
  CHECK(a.problem.grid == params.grid);
}

TEST_CASE("median estimate rejects corrupt samplers") {
  CHECK_THROWS_AS(
      median_relative_estimate(constant_sampler(11.0, 1024), 0.1, 0.2, 1),
      DomainError);
  CHECK_THROWS_AS(
      median_relative_estimate(constant_sampler(-2.0, 1024), 0.1, 0.2, 1),
      DomainError);
  SamplerDistribution empty;
  empty.m = 16;
  CHECK_THROWS_AS(median_relative_estimate(empty, 0.1, 0.2, 1), DomainError);
}

}  // TEST_SUITE
