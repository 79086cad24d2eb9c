#pragma once

#include <cstdint>
#include <string>

#include "qse/amplitude_estimation.hpp"
#include "qse/resource_ledger.hpp"
#include "qse/stream.hpp"

namespace qse {

enum class CaseTaken { no_majority, majority, degenerate_single_symbol };

const char* case_name(CaseTaken c);

struct TwoStageParams {
  double epsilon = 0.1;
  double delta = 0.2;
  std::uint64_t seed = 0;
};

struct TwoStageReport {
  double estimate = 0.0;
  CaseTaken case_taken = CaseTaken::no_majority;
  MajorityReport majority;
  ResourceLedger ledger;
  TwoStageParams params;
  std::uint64_t m = 0;
  std::uint32_t n = 0;
};

struct TwoStageOptions {
  // Substitute the exact sampler mean for the amplitude estimate. Isolates
  // the routing + reconstruction path from estimation error.
  bool exact_mean = false;
};

// Stage 1: majority vote + counting pass (2 passes). Stage 2: relative-error
// mean estimation on the full sampler (count <= m/2), or on the reduced
// sampler followed by closed-form reconstruction (count > m/2). A
// single-symbol stream short-circuits to the exact answer 0.
TwoStageReport run_two_stage(const Stream& s, double epsilon, double delta,
                             std::uint64_t seed,
                             const TwoStageOptions& options = {});

// H = ((m - m_x)/m) * mu_prime + (m_x/m) * log2(m / m_x). Requires
// 0 < m_x < m.
double reconstruct_entropy(double mu_prime, std::uint64_t m, std::uint64_t m_x);

// Ledger a run with these parameters would produce, without touching data.
// Passes: 2 for the degenerate case; 2 + 2R(2M+1) when no majority exists
// (2 passes per sampler execution); 2 + 3R(2M+1) with a majority (the
// reduced sampler adds a conversion pass).
ResourceLedger predict_resources(std::uint64_t m, std::uint64_t n,
                                 double epsilon, double delta,
                                 CaseTaken case_taken);

// |estimate - H| <= epsilon * H against the exact entropy (equality with 0
// required when H = 0).
bool verify_report(const TwoStageReport& report, const Stream& s);

// Flat JSON object: estimate, case, m, n, m_x, epsilon, delta, seed, passes,
// qubit_budget, a_executions.
std::string to_json_string(const TwoStageReport& report);

}  // namespace qse
