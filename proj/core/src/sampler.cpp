#include "qse/sampler.hpp"

#include "qse/error.hpp"
#include "qse/suffix_estimator.hpp"

namespace qse {

double SamplerDistribution::mean() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.probability * e.value;
  return s;
}

SamplerDistribution build_sampler(const Stream& s, SamplerKind kind,
                                  std::optional<std::uint32_t> x) {
  SamplerDistribution d;
  d.kind = kind;
  d.m = s.size();
  auto r = suffix_counts(s);

  if (kind == SamplerKind::case1_full) {
    if (x) throw DomainError("case1 sampler takes no excluded symbol");
    double p = 1.0 / static_cast<double>(s.size());
    d.entries.reserve(s.size());
    for (std::uint64_t q = 1; q <= s.size(); ++q)
      d.entries.push_back({q, p, x_of_r(r[q - 1], s.size())});
    return d;
  }

  if (!x) throw DomainError("case2 sampler needs the excluded symbol");
  std::uint64_t m_x = count_symbol(s, *x);
  if (m_x >= s.size())
    throw DomainError("excluded symbol covers the whole stream");
  // Positions of the excluded symbol drop out, but the suffix counts r'_q and
  // the lambda scale stay those of the full length-m stream.
  double p = 1.0 / static_cast<double>(s.size() - m_x);
  d.entries.reserve(s.size() - m_x);
  for (std::uint64_t q = 1; q <= s.size(); ++q)
    if (s.elements[q - 1] != *x)
      d.entries.push_back({q, p, x_of_r(r[q - 1], s.size())});
  return d;
}

}  // namespace qse
