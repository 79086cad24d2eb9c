#include "qse/two_stage.hpp"

#include <cmath>

#include "json.hpp"
#include "qse/error.hpp"
#include "qse/sampler.hpp"
#include "qse/suffix_estimator.hpp"

namespace qse {

namespace {

// Stage-1 working memory: vote candidate, vote counter, exact frequency.
std::uint64_t stage1_bits(std::uint64_t m, std::uint64_t n) {
  return ceil_log2(n) + ceil_log2(m) + ceil_log2(m + 1);
}

void check_params(double epsilon, double delta) {
  if (!(epsilon > 0.0) || epsilon >= 1.0)
    throw DomainError("relative accuracy must lie in (0, 1)");
  if (!(delta > 0.0) || delta >= 1.0)
    throw DomainError("failure probability must lie in (0, 1)");
}

}  // namespace

const char* case_name(CaseTaken c) {
  switch (c) {
    case CaseTaken::no_majority: return "no_majority";
    case CaseTaken::majority: return "majority";
    case CaseTaken::degenerate_single_symbol: return "degenerate_single_symbol";
  }
  return "?";
}

double reconstruct_entropy(double mu_prime, std::uint64_t m, std::uint64_t m_x) {
  if (m_x == 0 || m_x >= m)
    throw DomainError("reconstruction needs 0 < m_x < m");
  double fm = static_cast<double>(m);
  double fx = static_cast<double>(m_x);
  return ((fm - fx) / fm) * mu_prime + (fx / fm) * std::log2(fm / fx);
}

ResourceLedger predict_resources(std::uint64_t m, std::uint64_t n,
                                 double epsilon, double delta,
                                 CaseTaken case_taken) {
  check_params(epsilon, delta);
  if (m == 0 || n == 0) throw DomainError("need m >= 1 and n >= 1");
  ResourceLedger ledger;
  if (case_taken == CaseTaken::degenerate_single_symbol) {
    ledger.passes = 2;
    ledger.qubit_budget = qubit_budget(m, n, 1);
    ledger.classical_bits = stage1_bits(m, n);
    return ledger;
  }
  QaeParameters params = choose_parameters(epsilon, m, 1.0, delta);
  std::uint64_t per_execution =
      case_taken == CaseTaken::majority ? 3 : 2;  // conversion adds a pass
  ledger.a_executions = params.repetitions * (2 * params.grid + 1);
  ledger.oracle_calls = ledger.a_executions;
  ledger.passes = 2 + per_execution * ledger.a_executions;
  ledger.qubit_budget = qubit_budget(m, n, params.grid);
  ledger.classical_bits = stage1_bits(m, n) + ceil_log2(params.grid);
  ledger.asymptotic_passes =
      std::log(1.0 / delta) *
      std::sqrt(std::log2(std::exp(1.0) * static_cast<double>(m))) / epsilon;
  return ledger;
}

TwoStageReport run_two_stage(const Stream& s, double epsilon, double delta,
                             std::uint64_t seed,
                             const TwoStageOptions& options) {
  check_params(epsilon, delta);

  TwoStageReport report;
  report.m = s.size();
  report.n = s.n;
  report.params = {epsilon, delta, seed};
  report.majority = detect_majority(s);
  std::uint64_t m = s.size();
  std::uint64_t m_x = report.majority.count;

  if (m_x == m) {
    // One distinct symbol: the entropy is 0, no estimation pass needed.
    report.case_taken = CaseTaken::degenerate_single_symbol;
    report.estimate = 0.0;
    report.ledger = predict_resources(m, s.n, epsilon, delta, report.case_taken);
    return report;
  }

  if (2 * m_x <= m) {
    report.case_taken = CaseTaken::no_majority;
    auto sampler = build_sampler(s, SamplerKind::case1_full);
    if (options.exact_mean) {
      report.estimate = sampler.mean();
      report.ledger = predict_resources(m, s.n, epsilon, delta, report.case_taken);
      return report;
    }
    MedianEstimate est = median_relative_estimate(sampler, epsilon, delta, seed);
    report.estimate = est.estimate;
    report.ledger = predict_resources(m, s.n, epsilon, delta, report.case_taken);
    return report;
  }

  report.case_taken = CaseTaken::majority;
  auto sampler =
      build_sampler(s, SamplerKind::case2_excluded, report.majority.candidate);
  double mu_prime;
  if (options.exact_mean) {
    mu_prime = sampler.mean();
  } else {
    MedianEstimate est = median_relative_estimate(sampler, epsilon, delta, seed);
    mu_prime = est.estimate;
  }
  report.estimate = reconstruct_entropy(mu_prime, m, m_x);
  report.ledger = predict_resources(m, s.n, epsilon, delta, report.case_taken);
  return report;
}

bool verify_report(const TwoStageReport& report, const Stream& s) {
  double h = exact_entropy(s);
  if (h == 0.0) return report.estimate == 0.0;
  return std::abs(report.estimate - h) <= report.params.epsilon * h;
}

std::string to_json_string(const TwoStageReport& report) {
  nlohmann::ordered_json j;
  j["estimate"] = report.estimate;
  j["case"] = case_name(report.case_taken);
  j["m"] = report.m;
  j["n"] = report.n;
  j["m_x"] = report.majority.count;
  j["epsilon"] = report.params.epsilon;
  j["delta"] = report.params.delta;
  j["seed"] = report.params.seed;
  j["passes"] = report.ledger.passes;
  j["qubit_budget"] = report.ledger.qubit_budget;
  j["a_executions"] = report.ledger.a_executions;
  return j.dump();
}

}  // namespace qse
