#include "qse/resource_ledger.hpp"

#include <bit>

namespace qse {

std::uint64_t ceil_log2(std::uint64_t v) {
  if (v <= 1) return 0;
  return 64 - static_cast<std::uint64_t>(std::countl_zero(v - 1));
}

std::uint64_t qubit_budget(std::uint64_t m, std::uint64_t n, std::uint64_t grid) {
  return ceil_log2(m) + ceil_log2(n) + ceil_log2(m + 1) + ceil_log2(grid) +
         kFlagQubits;
}

}  // namespace qse
