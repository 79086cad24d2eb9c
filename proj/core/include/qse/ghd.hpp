#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qse/stream.hpp"
#include "qse/streaming_estimator.hpp"

namespace qse {

// A gap-Hamming instance: two bit strings of common length m. The promise
// classes are d <= m/2 - sqrt(m) (near) and d >= m/2 + sqrt(m) (far).
struct GhdInstance {
  std::vector<std::uint8_t> x;  // bits, values 0/1
  std::vector<std::uint8_t> y;

  std::uint64_t m() const noexcept { return x.size(); }
  std::uint64_t hamming_distance() const;
};

GhdInstance make_ghd_instance(std::string_view x_bits, std::string_view y_bits);

// File format: two lines of '0'/'1' characters of equal length.
GhdInstance load_ghd_instance(const std::string& path);
void save_ghd_instance(const GhdInstance& g, const std::string& path);

enum class GhdClass { near, far, unpromised };
GhdClass classify_instance(const GhdInstance& g);  // exact, integer arithmetic

enum class GhdDecision { near, far, undecided };
const char* decision_name(GhdDecision d);

// Entropy-carrying encoding: <j + m*x_j> for j = 1..m followed by
// <j + m*y_j>, a length-2m stream over {1..2m}. Its entropy is
// log2 m + d/m, so the promise gap becomes an entropy gap of 2/sqrt(m).
Stream encode_streams(const GhdInstance& g);

// log2 m + d/m, the closed form of the encoded stream's entropy.
double ghd_exact_entropy(const GhdInstance& g);

// Thresholds log2 m + 1/2 -+ 1/sqrt(m), both sides inclusive.
GhdDecision decide_ghd(double h_estimate, std::uint64_t m);

// Largest relative accuracy an entropy estimator may have while its error
// band still separates the two promise classes: 1/(sqrt(m)(log2 m + 1/2)).
double feasible_epsilon(std::uint64_t m);

// Random instance at distance floor(m/2) - ceil(sqrt(m)) (near) or
// floor(m/2) + ceil(sqrt(m)) (far). Raises DomainError if that distance
// falls outside the requested promise class (possible for odd m on the far
// side) or exceeds m.
GhdInstance make_boundary_instance(std::uint64_t m, GhdClass side,
                                   std::uint64_t seed);

enum class Party { alice, bob };

struct ProtocolMessage {
  std::uint64_t round = 0;
  Party sender = Party::alice;
  std::uint64_t bits = 0;  // serialized estimator state crossing the cut
};

struct ProtocolTranscript {
  std::uint64_t rounds = 0;  // 2T - 1 for a T-pass estimator
  std::vector<ProtocolMessage> messages;
  GhdDecision answer = GhdDecision::undecided;
  double estimate = 0.0;
  std::uint64_t memory_bits = 0;  // budget S
  std::uint64_t passes = 0;       // T
  bool budget_violation = false;
};

// Runs a T-pass streaming estimator on the encoded stream, spliced into a
// two-party protocol: Alice feeds her half, ships the estimator state to
// Bob, Bob feeds his half, ships it back, and so on; the final half-pass
// ends with Bob deciding. Any message above S bits sets budget_violation
// (the run still completes so the transcript can be inspected).
ProtocolTranscript simulate_protocol(const GhdInstance& g,
                                     StreamingEstimator& estimator,
                                     std::uint64_t passes,
                                     std::uint64_t memory_bits);

}  // namespace qse
