#include "qse/qipc.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qse/error.hpp"

namespace qse {

std::uint64_t pi_j(std::uint64_t j, std::uint64_t m, std::uint64_t q_in) {
  if (j == 0 || j > m) throw DomainError("pi_j needs 1 <= j <= m");
  if (q_in >= m) throw DomainError("pi_j input outside 0..m-1");
  if (j >= 2 && q_in <= j - 2) return q_in;
  if (q_in == m - 1) return j - 1;
  return q_in + 1;
}

QipcState qipc_init(std::uint64_t m, std::uint64_t m_x) {
  if (m == 0) throw DomainError("conversion needs m >= 1");
  if (m_x >= m)
    throw DomainError("conversion needs m_x < m; a single-symbol stream is degenerate");
  QipcState st;
  st.support.resize(m - m_x);
  std::iota(st.support.begin(), st.support.end(), std::uint64_t{0});
  return st;
}

void qipc_step(QipcState& st, std::uint64_t j, std::uint32_t xj,
               std::uint32_t x, std::uint64_t m) {
  st.c = (xj == x) ? 1 : 0;
  if (st.c) {
    for (auto& q : st.support) q = pi_j(j, m, q);
    std::sort(st.support.begin(), st.support.end());
    // pi_j is a bijection, so the support size cannot collapse.
    if (std::adjacent_find(st.support.begin(), st.support.end()) !=
        st.support.end())
      throw StateError("support collision after step " + std::to_string(j));
  }
  st.l += 1;
  st.r += st.c ? 0 : 1;
  st.c = 0;  // uncomputed before the next element arrives
}

QipcState qipc_run(const Stream& s, std::uint32_t x, std::uint64_t m_x) {
  if (count_symbol(s, x) != m_x)
    throw DomainError("declared frequency m_x=" + std::to_string(m_x) +
                      " does not match the stream");
  QipcState st = qipc_init(s.size(), m_x);
  for (std::uint64_t j = 1; j <= s.size(); ++j)
    qipc_step(st, j, s.elements[j - 1], x, s.size());
  return st;
}

}  // namespace qse
