#pragma once

#include <cstdint>
#include <vector>

#include "qse/stream.hpp"
#include "qse/two_stage.hpp"

namespace qse {

// One row of the classical-vs-quantum space comparison at a given accuracy.
struct ContrastRow {
  double epsilon = 0.0;
  std::uint64_t classical_k = 0;     // Monte Carlo samples needed
  std::uint64_t classical_bits = 0;  // k * (ceil(log2 m) + ceil(log2 n))
  std::uint64_t quantum_passes = 0;
  std::uint64_t quantum_qubits = 0;
};

struct ContrastConfig {
  std::vector<double> epsilons;   // descending accuracy targets
  double delta = 0.2;
  bool empirical = true;     // calibrate k by trial runs; else Hoeffding bound
  std::uint64_t trials = 50;      // calibration trials per candidate k
  double success_target = 0.9;    // required fraction within epsilon*H
  std::uint64_t k_start = 16;     // doubling search floor
  std::uint64_t k_limit = std::uint64_t{1} << 26;
  std::uint64_t seed = 1;
};

// For each epsilon: the smallest k in the doubling sequence whose Monte Carlo
// estimate lands within epsilon*H in at least success_target of the trials
// (or the Hoeffding k when empirical is off), next to the predicted quantum
// ledger for the same stream and accuracy.
std::vector<ContrastRow> classical_quantum_contrast(const Stream& s,
                                                    const ContrastConfig& cfg);

std::string contrast_csv(const std::vector<ContrastRow>& rows);

}  // namespace qse
