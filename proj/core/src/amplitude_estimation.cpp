#include "qse/amplitude_estimation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qse/error.hpp"
#include "qse/rng.hpp"
#include "qse/suffix_estimator.hpp"

namespace qse {

namespace {

constexpr double kPi = std::numbers::pi;

// F_M(delta) = sin^2(M pi delta) / (M^2 sin^2(pi delta)), extended by
// continuity to 1 at integer delta. Both factors are evaluated on the
// residue delta - round(delta), which leaves the value unchanged (sin^2 has
// period 1 and M is an integer) but keeps the argument small.
double kernel(double delta, std::uint64_t grid) {
  double reduced = delta - std::round(delta);
  if (reduced == 0.0) return 1.0;
  double md = static_cast<double>(grid);
  double num = std::sin(md * kPi * reduced);
  double den = md * std::sin(kPi * reduced);
  return (num * num) / (den * den);
}

void check_grid(std::uint64_t grid) {
  if (grid < 2 || !std::has_single_bit(grid))
    throw DomainError("grid size must be a power of two >= 2");
}

}  // namespace

double scale_value(double x, double a, double b) {
  if (!(a + b > 0)) throw DomainError("scale needs a + b > 0");
  if (x < -a || x > b)
    throw DomainError("value " + std::to_string(x) + " outside [-a, b]");
  return (x + a) / (a + b);
}

double unscale_value(double nu, double a, double b) {
  if (!(a + b > 0)) throw DomainError("scale needs a + b > 0");
  if (nu < 0.0 || nu > 1.0)
    throw DomainError("scaled value outside [0, 1]");
  return (a + b) * nu - a;
}

std::vector<double> qae_outcome_distribution(double nu, std::uint64_t grid) {
  check_grid(grid);
  if (!(nu >= 0.0 && nu <= 1.0))
    throw DomainError("amplitude outside [0, 1]");
  double omega = std::asin(std::sqrt(nu)) / kPi;  // in [0, 1/2]
  std::vector<double> p(grid);
  double md = static_cast<double>(grid);
  for (std::uint64_t y = 0; y < grid; ++y) {
    double frac = static_cast<double>(y) / md;
    p[y] = 0.5 * kernel(frac - omega, grid) + 0.5 * kernel(frac + omega, grid);
  }
  return p;
}

double estimate_from_outcome(std::uint64_t y, std::uint64_t grid) {
  check_grid(grid);
  if (y >= grid) throw DomainError("outcome index outside the grid");
  std::uint64_t folded = std::min(y, grid - y);
  double s = std::sin(kPi * static_cast<double>(folded) / static_cast<double>(grid));
  return s * s;
}

QaeOutcome qae_sample(double nu, std::uint64_t grid, std::mt19937_64& rng) {
  auto p = qae_outcome_distribution(nu, grid);
  double u = canonical_double(rng);
  double cumulative = 0.0;
  std::uint64_t y = grid - 1;  // fallback soaks up the last ulp of mass
  for (std::uint64_t i = 0; i < grid; ++i) {
    cumulative += p[i];
    if (u < cumulative) {
      y = i;
      break;
    }
  }
  QaeOutcome out;
  out.y = y;
  out.estimate = estimate_from_outcome(y, grid);
  out.repetitions = {out.estimate};
  out.median = out.estimate;
  return out;
}

QaeParameters choose_parameters(double epsilon, std::uint64_t m, double e_lower,
                                double delta, double calibration) {
  if (!(epsilon > 0.0) || epsilon >= 1.0)
    throw DomainError("relative accuracy must lie in (0, 1)");
  if (!(delta > 0.0) || delta >= 1.0)
    throw DomainError("failure probability must lie in (0, 1)");
  if (m < 2) throw DomainError("estimation needs m >= 2");
  if (!(e_lower >= 1.0)) throw DomainError("mean lower bound must be >= 1");
  double a = kLog2E;
  double b = std::log2(static_cast<double>(m));
  if (e_lower > b)
    throw DomainError("mean lower bound exceeds the value range");

  // Worst-case scaled mean, and the relative target tightened for the shift
  // by a: an estimate within eps_tilde of nu stays within eps of the mean.
  double nu_lower = (e_lower + a) / (a + b);
  double eps_tilde = epsilon * e_lower / (e_lower + a);

  QaeParameters out;
  double raw = calibration / (eps_tilde * std::sqrt(nu_lower));
  out.t = static_cast<std::uint64_t>(std::ceil(raw)) + 1;
  out.grid = std::bit_ceil(out.t);
  out.repetitions =
      2 * static_cast<std::uint64_t>(std::ceil(6.0 * std::log(1.0 / delta))) + 1;
  return out;
}

MedianEstimate median_relative_estimate(const SamplerDistribution& sampler,
                                        double epsilon, double delta,
                                        std::uint64_t seed, double e_lower) {
  if (sampler.entries.empty()) throw DomainError("empty sampler");
  auto [lo, hi] = x_bounds(sampler.m);
  double a = -lo;
  double b = hi;
  for (const auto& e : sampler.entries)
    if (e.value < lo - 1e-12 || e.value > hi + 1e-12)
      throw DomainError("sampler value outside the admissible range");

  MedianEstimate result;
  result.problem.a = a;
  result.problem.b = b;
  result.problem.nu = scale_value(std::clamp(sampler.mean(), lo, hi), a, b);

  QaeParameters params =
      choose_parameters(epsilon, sampler.m, e_lower, delta);
  result.problem.grid = params.grid;
  result.problem.t = params.t;

  QaeOutcome combined;
  combined.repetitions.reserve(params.repetitions);
  std::vector<std::pair<double, std::uint64_t>> trials;  // estimate, outcome y
  trials.reserve(params.repetitions);
  for (std::uint64_t i = 0; i < params.repetitions; ++i) {
    auto rng = make_rng(derive_seed(seed, i));
    QaeOutcome o = qae_sample(result.problem.nu, params.grid, rng);
    combined.repetitions.push_back(o.estimate);
    trials.emplace_back(o.estimate, o.y);
  }
  auto mid = trials.begin() + static_cast<std::ptrdiff_t>(trials.size() / 2);
  std::nth_element(trials.begin(), mid, trials.end());
  combined.median = mid->first;
  combined.y = mid->second;
  combined.estimate = mid->first;
  result.outcome = std::move(combined);

  result.estimate = unscale_value(result.outcome.median, a, b);
  result.ledger.a_executions = params.repetitions * (2 * params.grid + 1);
  result.ledger.oracle_calls = result.ledger.a_executions;
  return result;
}

}  // namespace qse
