#pragma once

#include <cstdint>

namespace qse {

// Resource accounting for one estimation run. Pass and execution counts are
// concrete event counts; qubit_budget is the idealized register footprint of
// the simulated machine (value registers hold exact reals in simulation, so
// their widths are charged here rather than allocated).
struct ResourceLedger {
  std::uint64_t passes = 0;         // full sweeps over the stream
  std::uint64_t qubit_budget = 0;   // position+symbol+counter+grid+flags
  std::uint64_t classical_bits = 0; // classical working memory modeled
  std::uint64_t a_executions = 0;   // state-preparation subroutine runs
  std::uint64_t oracle_calls = 0;   // streaming-oracle invocations
  // Leading-order pass scale ln(1/delta)*sqrt(log2(e*m))/epsilon, kept next
  // to the concrete count so growth-rate comparisons need no recomputation;
  // 0 when no estimation stage runs.
  double asymptotic_passes = 0.0;
};

// ceil(log2 v) for v >= 1; returns 0 for v <= 1.
std::uint64_t ceil_log2(std::uint64_t v);

// One comparison flag + one rotation target beyond the indexed registers.
inline constexpr std::uint64_t kFlagQubits = 2;

// ceil(log2 m) + ceil(log2 n) + ceil(log2 (m+1)) + ceil(log2 grid) + flags:
// position, latch/symbol, suffix counter (range 0..m), estimation grid.
std::uint64_t qubit_budget(std::uint64_t m, std::uint64_t n, std::uint64_t grid);

}  // namespace qse
