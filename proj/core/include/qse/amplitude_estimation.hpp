#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qse/resource_ledger.hpp"
#include "qse/sampler.hpp"

namespace qse {

// Affine [-a, b] -> [0, 1] rescaling and its inverse.
double scale_value(double x, double a, double b);
double unscale_value(double nu, double a, double b);

// One amplitude-estimation instance: recover nu from phase readings on an
// M-point grid. `calibration` is the constant C in the grid-size rule
// t = ceil(C / (eps_rel * sqrt(nu_lower))) + 1.
struct QaeProblem {
  double nu = 0.0;
  double a = 0.0;            // -lower bound of the unscaled variable (log2 e)
  double b = 0.0;            // upper bound (log2 m)
  std::uint64_t grid = 0;    // M, a power of two
  std::uint64_t t = 0;       // accuracy parameter, grid = 2^ceil(log2 t)
  double calibration = std::numbers::pi;
};

struct QaeOutcome {
  std::uint64_t y = 0;             // measured grid index (median trial)
  double estimate = 0.0;           // sin^2(pi y / M)
  std::vector<double> repetitions; // per-trial estimates, trial order
  double median = 0.0;
};

// Exact measurement law of phase estimation run on the amplification walk:
// an equal mixture of two Fejer-style kernels centered at the eigenphase
// pair +-omega, omega = arcsin(sqrt(nu))/pi. Index y has probability
// (F(y/M - omega) + F(y/M + omega)) / 2 with
// F(delta) = sin^2(M pi delta) / (M^2 sin^2(pi delta)), F(integer) = 1.
std::vector<double> qae_outcome_distribution(double nu, std::uint64_t grid);

// sin^2(pi y / M), folded through min(y, M - y) so mirrored outcomes give
// bit-identical estimates.
double estimate_from_outcome(std::uint64_t y, std::uint64_t grid);

// Draws one grid index from the exact outcome law.
QaeOutcome qae_sample(double nu, std::uint64_t grid, std::mt19937_64& rng);

struct QaeParameters {
  std::uint64_t t = 0;
  std::uint64_t grid = 0;         // M = 2^ceil(log2 t)
  std::uint64_t repetitions = 0;  // R, odd
};

// Grid and repetition counts for relative error epsilon at confidence
// 1 - delta, valid whenever the true mean is at least e_lower. The relative
// target is tightened to eps * e_lower / (e_lower + a) before sizing the
// grid; R = 2 ceil(6 ln(1/delta)) + 1.
QaeParameters choose_parameters(double epsilon, std::uint64_t m, double e_lower,
                                double delta,
                                double calibration = std::numbers::pi);

struct MedianEstimate {
  double estimate = 0.0;   // unscaled estimate of the sampler mean
  QaeOutcome outcome;
  QaeProblem problem;
  ResourceLedger ledger;   // a_executions/oracle_calls contribution only
};

// Median of R independent amplitude estimates of the sampler's scaled mean,
// mapped back to the value scale. Trial seeds derive from `seed`, so the
// result is reproducible and order-independent. Each trial charges 2M+1
// executions of the sampling subroutine (M walk steps, each one application
// plus one inversion, after one preparation).
MedianEstimate median_relative_estimate(const SamplerDistribution& sampler,
                                        double epsilon, double delta,
                                        std::uint64_t seed,
                                        double e_lower = 1.0);

}  // namespace qse
