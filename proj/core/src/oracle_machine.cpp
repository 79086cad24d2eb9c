#include "qse/oracle_machine.hpp"

#include <ostream>
#include <string>

#include "qse/error.hpp"
#include "qse/suffix_estimator.hpp"

namespace qse {

namespace {

const char* pass_name(OraclePass p) {
  switch (p) {
    case OraclePass::first: return "first";
    case OraclePass::arithmetic: return "arithmetic";
    case OraclePass::second: return "second";
    case OraclePass::done: return "done";
  }
  return "?";
}

void trace_line(std::ostream* trace, const MachineState& st, std::uint64_t j,
                std::uint32_t xj) {
  if (!trace) return;
  *trace << "pass=" << pass_name(st.pass) << " j=" << j << " xj=" << xj
         << " y=" << st.y << " v=" << (st.v ? std::to_string(*st.v) : "-")
         << '\n';
}

}  // namespace

MachineState make_machine_state(std::uint64_t q) {
  if (q == 0) throw DomainError("positions are 1-based");
  MachineState st;
  st.q = q;
  return st;
}

MachineState oracle_step(MachineState st, std::uint64_t j, std::uint32_t xj,
                         StepDirection direction) {
  if (j == 0) throw DomainError("step index j is 1-based");
  if (direction == StepDirection::forward) {
    if (st.pass != OraclePass::first)
      throw StateError("forward step outside the first pass");
    if (j == st.q) {
      st.v = xj;  // XOR-load from the empty latch
      ++st.y;
    } else if (j > st.q && st.v && *st.v == xj) {
      ++st.y;
    }
    return st;
  }
  if (st.pass != OraclePass::second)
    throw StateError("inverse step outside the second pass");
  bool hit = (j == st.q) || (j > st.q && st.v && *st.v == xj);
  if (hit) {
    if (st.y == 0)
      throw StateError("counter underflow while uncomputing: corrupted state");
    --st.y;
  }
  return st;
}

OracleResult oracle_run(const Stream& s, std::uint64_t q, std::ostream* trace) {
  if (q == 0 || q > s.size())
    throw DomainError("position " + std::to_string(q) + " outside 1.." +
                      std::to_string(s.size()));
  MachineState st = make_machine_state(q);
  for (std::uint64_t j = 1; j <= s.size(); ++j) {
    st = oracle_step(st, j, s.elements[j - 1], StepDirection::forward);
    trace_line(trace, st, j, s.elements[j - 1]);
  }

  OracleResult result;
  result.r = st.y;  // r_q >= 1: position q always matches itself

  st.pass = OraclePass::arithmetic;
  st.xreg = x_of_r(result.r, s.size());
  result.value = *st.xreg;

  st.pass = OraclePass::second;
  for (std::uint64_t j = 1; j <= s.size(); ++j) {
    st = oracle_step(st, j, s.elements[j - 1], StepDirection::inverse);
    trace_line(trace, st, j, s.elements[j - 1]);
  }
  if (st.y != 0)
    throw StateError("second pass left the counter at " + std::to_string(st.y));
  st.pass = OraclePass::done;
  result.final_state = st;
  return result;
}

}  // namespace qse
