#include "qse/suffix_estimator.hpp"

#include <cmath>
#include <unordered_map>

#include "qse/error.hpp"
#include "qse/rng.hpp"

namespace qse {

double lambda_m(std::uint64_t r, std::uint64_t m) {
  if (m == 0) throw DomainError("lambda needs m >= 1");
  if (r > m) throw DomainError("lambda argument r exceeds m");
  if (r == 0) return 0.0;
  // r = m gives log2(1) = 0 exactly, matching the r = 0 end.
  return static_cast<double>(r) *
         std::log2(static_cast<double>(m) / static_cast<double>(r));
}

double x_of_r(std::uint64_t r, std::uint64_t m) {
  if (r == 0) throw DomainError("X(r) is defined for r >= 1");
  return lambda_m(r, m) - lambda_m(r - 1, m);
}

std::pair<double, double> x_bounds(std::uint64_t m) {
  if (m == 0) throw DomainError("bounds need m >= 1");
  return {-kLog2E, std::log2(static_cast<double>(m))};
}

std::uint64_t suffix_count(const Stream& s, std::uint64_t q) {
  std::uint32_t x = s.at(q);  // range-checks q
  std::uint64_t r = 0;
  for (std::uint64_t j = q; j <= s.size(); ++j)
    if (s.elements[j - 1] == x) ++r;
  return r;
}

std::vector<std::uint64_t> suffix_counts(const Stream& s) {
  std::vector<std::uint64_t> r(s.size());
  std::unordered_map<std::uint32_t, std::uint64_t> seen;
  seen.reserve(64);
  for (std::uint64_t j = s.size(); j >= 1; --j)
    r[j - 1] = ++seen[s.elements[j - 1]];
  return r;
}

double brute_force_entropy(const Stream& s) {
  auto r = suffix_counts(s);
  double sum = 0.0;
  for (std::uint64_t q = 1; q <= s.size(); ++q)
    sum += x_of_r(r[q - 1], s.size());
  return sum / static_cast<double>(s.size());
}

double classical_mc_estimate_at(const Stream& s,
                                std::span<const std::uint64_t> positions) {
  if (positions.empty()) throw DomainError("at least one sample position");
  // The modeled algorithm keeps one latch+counter per sample; the simulation
  // reproduces its output with running occurrence totals instead, so a batch
  // costs O(m + k) rather than O(m k).
  std::vector<std::uint64_t> order(positions.begin(), positions.end());
  std::sort(order.begin(), order.end());
  if (order.front() == 0 || order.back() > s.size())
    throw DomainError("sample position outside 1..m");

  std::unordered_map<std::uint32_t, std::uint64_t> occurrences;
  occurrences.reserve(64);
  std::vector<std::uint64_t> before(order.size());  // occurrences before q
  std::vector<std::uint32_t> latched(order.size());
  std::size_t next = 0;
  for (std::uint64_t j = 1; j <= s.size(); ++j) {
    std::uint32_t e = s.elements[j - 1];
    while (next < order.size() && order[next] == j) {
      latched[next] = e;
      before[next] = occurrences[e];
      ++next;
    }
    ++occurrences[e];
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::uint64_t r = occurrences[latched[i]] - before[i];
    sum += x_of_r(r, s.size());
  }
  return sum / static_cast<double>(order.size());
}

EstimateReport classical_mc_estimate(const Stream& s, std::uint64_t k,
                                     std::uint64_t seed) {
  if (k == 0) throw DomainError("sample count k must be >= 1");
  auto rng = make_rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, s.size());
  std::vector<std::uint64_t> positions(k);
  for (auto& q : positions) q = pick(rng);

  EstimateReport report;
  report.estimate = classical_mc_estimate_at(s, positions);
  report.trials = k;
  report.method = EstimateMethod::classical_mc;
  report.ledger.passes = 1;
  report.ledger.classical_bits = classical_mc_bits(s.size(), s.n, k);
  return report;
}

std::uint64_t classical_mc_bits(std::uint64_t m, std::uint64_t n,
                                std::uint64_t k) {
  return k * (ceil_log2(m) + ceil_log2(n));
}

std::uint64_t classical_mc_samples(double epsilon, double delta,
                                   std::uint64_t m, double h_min) {
  if (!(epsilon > 0.0) || !(delta > 0.0) || !(delta < 1.0) || !(h_min > 0.0))
    throw DomainError("need epsilon > 0, 0 < delta < 1, h_min > 0");
  auto [lo, hi] = x_bounds(m);
  double range = hi - lo;
  double target = epsilon * h_min;
  double k = range * range * std::log(2.0 / delta) / (2.0 * target * target);
  return static_cast<std::uint64_t>(std::ceil(k));
}

}  // namespace qse
