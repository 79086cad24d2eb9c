#pragma once

#include <cstdint>
#include <vector>

#include "qse/stream.hpp"

namespace qse {

// Permutation applied at step j of the index-position conversion, acting on
// {0..m-1}: identity below j-1, shift-up on [j-1, m-2], wrap m-1 -> j-1.
// pi_1 is the cyclic shift q -> q+1 mod m.
std::uint64_t pi_j(std::uint64_t j, std::uint64_t m, std::uint64_t q_in);

// Registers of the index-position conversion routine. `support` is the exact
// basis-state support of the index register: every update is a classically
// controlled permutation, so tracking the support set simulates the unitary
// losslessly. l counts elements seen, r counts elements differing from the
// excluded symbol, and the flag c is recomputed and cleared every step.
struct QipcState {
  std::vector<std::uint64_t> support;  // sorted 0-based index values
  std::uint64_t l = 0;
  std::uint64_t r = 0;
  std::uint8_t c = 0;
};

// Uniform support {0..m-m_x-1} with cleared counters.
QipcState qipc_init(std::uint64_t m, std::uint64_t m_x);

// One stream element: set the flag c = [x_j = x], permute the support by pi_j
// when flagged, bump l and r, clear the flag.
void qipc_step(QipcState& st, std::uint64_t j, std::uint32_t xj,
               std::uint32_t x, std::uint64_t m);

// Full conversion: evolves {0..m-m_x-1} into the 0-based positions of the
// elements different from x, with l = m and r = m - m_x on exit. m_x must be
// the exact frequency of x and strictly below m.
QipcState qipc_run(const Stream& s, std::uint32_t x, std::uint64_t m_x);

}  // namespace qse
