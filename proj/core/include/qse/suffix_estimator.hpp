#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qse/resource_ledger.hpp"
#include "qse/stream.hpp"

namespace qse {

inline constexpr double kLog2E = 1.4426950408889634;  // log2(e)

// lambda_m(r) = r * log2(m/r), extended by lambda_m(0) = 0. Exactly 0 at both
// r = 0 and r = m.
double lambda_m(std::uint64_t r, std::uint64_t m);

// Per-position value X(r) = lambda_m(r) - lambda_m(r-1). Strictly decreasing
// in r, X(1) = log2 m, and X(r) > -log2 e for every r <= m. Averaged over a
// uniform position, X(r_q) is an unbiased estimate of the stream's entropy.
double x_of_r(std::uint64_t r, std::uint64_t m);

// Value range of X over streams of length m: (-log2 e, log2 m).
std::pair<double, double> x_bounds(std::uint64_t m);

// r_q = occurrences of x_q within positions q..m. O(m - q).
std::uint64_t suffix_count(const Stream& s, std::uint64_t q);

// Every r_q in one backward sweep; result[q-1] = r_q.
std::vector<std::uint64_t> suffix_counts(const Stream& s);

// Mean of X(r_q) over all m positions. Agrees with exact_entropy through the
// per-symbol telescoping of lambda_m, but is computed along the suffix-count
// route so the two stay independent checks of each other.
double brute_force_entropy(const Stream& s);

struct SuffixSample {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  double value = 0.0;
};

enum class EstimateMethod { classical_mc, quantum_sim };

struct EstimateReport {
  double estimate = 0.0;
  std::uint64_t trials = 0;
  ResourceLedger ledger;
  EstimateMethod method = EstimateMethod::classical_mc;
};

// Mean of X at the given 1-based positions, all suffix counters riding a
// single pass over the stream.
double classical_mc_estimate_at(const Stream& s,
                                std::span<const std::uint64_t> positions);

// Uniform-position Monte Carlo baseline with k samples. The ledger charges
// one pass and k latch+counter slots.
EstimateReport classical_mc_estimate(const Stream& s, std::uint64_t k,
                                     std::uint64_t seed);

// Modeled memory of the one-pass baseline: k * (ceil(log2 m) + ceil(log2 n)).
std::uint64_t classical_mc_bits(std::uint64_t m, std::uint64_t n,
                                std::uint64_t k);

// Hoeffding sample count for |estimate - H| <= epsilon * h_min with failure
// probability at most delta, given the value range of X on length-m streams.
std::uint64_t classical_mc_samples(double epsilon, double delta,
                                   std::uint64_t m, double h_min = 1.0);

}  // namespace qse
