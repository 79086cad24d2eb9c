#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qse/stream.hpp"

namespace qse {

enum class SamplerKind { case1_full, case2_excluded };

struct SamplerEntry {
  std::uint64_t q = 0;       // 1-based stream position
  double probability = 0.0;
  double value = 0.0;        // X_q (case 1) or X'_q (case 2)
};

// Classical image of the coherent sampling state: the exact distribution of
// the value register when the position register is measured. case1_full puts
// uniform weight on every position; case2_excluded drops the positions that
// hold the excluded (majority) symbol but keeps suffix counts and the
// lambda_m scale of the full stream.
struct SamplerDistribution {
  std::vector<SamplerEntry> entries;
  SamplerKind kind = SamplerKind::case1_full;
  std::uint64_t m = 0;  // length of the underlying stream (value scale)

  double mean() const;
};

// x names the excluded symbol and is required (and only allowed) for
// case2_excluded; its frequency must be below m.
SamplerDistribution build_sampler(const Stream& s, SamplerKind kind,
                                  std::optional<std::uint32_t> x = std::nullopt);

}  // namespace qse
