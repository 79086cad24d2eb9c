#include "qse/tables.hpp"

#include <cmath>
#include <cstdio>

#include "qse/error.hpp"
#include "qse/rng.hpp"
#include "qse/suffix_estimator.hpp"

namespace qse {

namespace {

CaseTaken stream_case(const Stream& s) {
  MajorityReport majority = detect_majority(s);
  if (majority.count == s.size()) return CaseTaken::degenerate_single_symbol;
  if (2 * majority.count <= s.size()) return CaseTaken::no_majority;
  return CaseTaken::majority;
}

// Smallest k in the doubling sequence whose Monte Carlo estimate stays within
// eps*H for at least success_target of the calibration trials.
std::uint64_t calibrate_k(const Stream& s, double h, double eps,
                          const ContrastConfig& cfg, std::uint64_t eps_index) {
  auto needed = static_cast<std::uint64_t>(
      std::ceil(cfg.success_target * static_cast<double>(cfg.trials)));
  std::uint64_t step = 0;
  for (std::uint64_t k = cfg.k_start; k <= cfg.k_limit; k *= 2, ++step) {
    std::uint64_t successes = 0;
    for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
      std::uint64_t seed = derive_seed(
          derive_seed(cfg.seed, eps_index * 1000003 + step), trial);
      EstimateReport r = classical_mc_estimate(s, k, seed);
      if (std::abs(r.estimate - h) <= eps * h) ++successes;
    }
    if (successes >= needed) return k;
  }
  throw DomainError("Monte Carlo calibration exceeded the sample limit");
}

}  // namespace

std::vector<ContrastRow> classical_quantum_contrast(const Stream& s,
                                                    const ContrastConfig& cfg) {
  if (cfg.epsilons.empty()) throw DomainError("no accuracy targets given");
  double h = exact_entropy(s);
  if (!(h > 0.0))
    throw DomainError("a single-symbol stream has no accuracy scale");
  CaseTaken case_taken = stream_case(s);

  std::vector<ContrastRow> rows;
  rows.reserve(cfg.epsilons.size());
  for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
    double eps = cfg.epsilons[i];
    ContrastRow row;
    row.epsilon = eps;
    row.classical_k = cfg.empirical
                          ? calibrate_k(s, h, eps, cfg, i)
                          : classical_mc_samples(eps, cfg.delta, s.size());
    row.classical_bits = classical_mc_bits(s.size(), s.n, row.classical_k);
    ResourceLedger ledger =
        predict_resources(s.size(), s.n, eps, cfg.delta, case_taken);
    row.quantum_passes = ledger.passes;
    row.quantum_qubits = ledger.qubit_budget;
    rows.push_back(row);
  }
  return rows;
}

std::string contrast_csv(const std::vector<ContrastRow>& rows) {
  std::string out = "epsilon,classical_k,classical_bits,quantum_passes,quantum_qubits\n";
  char line[160];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%g,%llu,%llu,%llu,%llu\n", r.epsilon,
                  static_cast<unsigned long long>(r.classical_k),
                  static_cast<unsigned long long>(r.classical_bits),
                  static_cast<unsigned long long>(r.quantum_passes),
                  static_cast<unsigned long long>(r.quantum_qubits));
    out += line;
  }
  return out;
}

}  // namespace qse
