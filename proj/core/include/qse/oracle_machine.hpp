#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "qse/stream.hpp"

namespace qse {

enum class OraclePass { first, arithmetic, second, done };
enum class StepDirection { forward, inverse };

// Register file of the two-pass streaming oracle that computes |q>|0> ->
// |q>|X_q>. One basis branch is simulated exactly; distinct branches of a
// superposition never interact, so per-branch evolution is the whole circuit.
struct MachineState {
  std::uint64_t q = 0;              // position register, 1-based
  std::optional<std::uint32_t> v;   // latch register: holds x_q once seen
  std::uint64_t y = 0;              // suffix counter register
  std::optional<double> xreg;       // value register, set in the arithmetic phase
  OraclePass pass = OraclePass::first;
};

MachineState make_machine_state(std::uint64_t q);

// Pushes one stream element through the oracle. Forward: latch v at j = q,
// then add g_q(x_j) = [j >= q and x_j = x_q] to the counter. Inverse:
// subtract the same predicate but leave the latch in place -- the counter
// updates all commute, so a second pass in forward stream order still drives
// y back to zero while later comparisons keep seeing x_q. Underflow of y
// raises StateError, as does a direction inconsistent with st.pass.
MachineState oracle_step(MachineState st, std::uint64_t j, std::uint32_t xj,
                         StepDirection direction);

struct OracleResult {
  std::uint64_t r = 0;       // suffix count accumulated by the first pass
  double value = 0.0;        // X_q written by the arithmetic phase
  MachineState final_state;  // y uncomputed to 0, latch still holding x_q
};

// First pass, arithmetic phase, then the forward-order inverse pass. When
// trace is given, one line per step is written as
// "pass=<p> j=<j> xj=<x> y=<y> v=<v>".
OracleResult oracle_run(const Stream& s, std::uint64_t q,
                        std::ostream* trace = nullptr);

}  // namespace qse
