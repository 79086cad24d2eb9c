#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qse {

// An insert-only data stream over the alphabet {1..n}. Positions are 1-based
// in every public interface; 0-based offsets stay internal to implementations.
struct Stream {
  std::vector<std::uint32_t> elements;
  std::uint32_t n = 0;

  std::uint64_t size() const noexcept { return elements.size(); }

  // 1-based access with range check.
  std::uint32_t at(std::uint64_t q) const;
};

// Validates the element range and, when n is not given, tightens it to the
// largest element present.
Stream make_stream(std::vector<std::uint32_t> elements,
                   std::optional<std::uint32_t> n = std::nullopt);

struct EmpiricalDistribution {
  std::map<std::uint32_t, std::uint64_t> counts;  // symbol -> occurrences
  std::uint64_t m = 0;

  double probability(std::uint32_t symbol) const;
};

struct MajorityReport {
  std::uint32_t candidate = 0;
  std::uint64_t count = 0;      // exact frequency of `candidate`
  bool is_majority = false;     // count > m/2
};

enum class StreamFormat { text, binary };

// Text: whitespace-separated decimals with an optional "# m=<int> n=<int>"
// first line. Binary: "QSE1" magic, little-endian u32 m and n, then m
// little-endian u32 elements; a bare sequence of u32 values (no magic) is
// also accepted.
Stream parse_stream(std::string_view bytes, StreamFormat format);
std::string format_stream(const Stream& s, StreamFormat format);

// File wrappers. load_stream sniffs the binary magic and falls back to text.
Stream load_stream(const std::string& path);
void save_stream(const Stream& s, const std::string& path, StreamFormat format);

EmpiricalDistribution frequencies(const Stream& s);

// Plug-in entropy of the empirical distribution, in bits.
double exact_entropy(const EmpiricalDistribution& d);
double exact_entropy(const Stream& s);

// Boyer-Moore majority vote: one pass, one candidate + one counter. If some
// symbol occurs more than m/2 times it is returned; otherwise the result is
// whatever survives the vote and carries no guarantee.
std::uint32_t boyer_moore_candidate(const Stream& s);

std::uint64_t count_symbol(const Stream& s, std::uint32_t x);

// Candidate pass + exact counting pass (two passes total).
MajorityReport detect_majority(const Stream& s);

enum class StreamKind { uniform, zipf, majority, ghd };

struct GeneratorParams {
  std::uint64_t m = 0;
  std::uint32_t n = 0;
  double zipf_exponent = 1.0;     // zipf: weight of symbol i is i^-exponent
  double majority_fraction = 0.75;  // majority: fraction in (1/2, 1]
  std::string ghd_x;              // ghd: bit strings of equal length
  std::string ghd_y;
};

// Deterministic for a fixed (kind, params, seed). The majority kind plants a
// symbol with exactly ceil(fraction*m) occurrences; the ghd kind delegates to
// the two-party encoding and ignores params.m / params.n.
Stream generate_stream(StreamKind kind, const GeneratorParams& params,
                       std::uint64_t seed);

}  // namespace qse
