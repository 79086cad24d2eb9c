#include "qse/streaming_estimator.hpp"

#include <algorithm>

#include "qse/error.hpp"
#include "qse/resource_ledger.hpp"
#include "qse/rng.hpp"
#include "qse/suffix_estimator.hpp"

namespace qse {

namespace {

// Little-endian byte serialization for snapshots.
void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

struct Reader {
  const std::vector<std::uint8_t>& bytes;
  std::size_t at = 0;

  std::uint32_t u32() {
    if (at + 4 > bytes.size()) throw ParseError("snapshot truncated");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes[at++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    if (at + 8 > bytes.size()) throw ParseError("snapshot truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[at++]) << (8 * i);
    return v;
  }
  void done() const {
    if (at != bytes.size()) throw ParseError("snapshot has trailing bytes");
  }
};

}  // namespace

// --- ExactEntropyEstimator --------------------------------------------------

void ExactEntropyEstimator::reset(std::uint64_t m, std::uint32_t n) {
  if (m == 0) throw DomainError("declared stream length must be >= 1");
  m_ = m;
  n_ = n;
  pass_ = 0;
  counts_.clear();
}

void ExactEntropyEstimator::begin_pass(std::uint64_t pass) {
  if (pass == 0) throw DomainError("passes are numbered from 1");
  pass_ = pass;
  // A re-read recounts from scratch; the final pass leaves the full table.
  if (pass > 1) counts_.clear();
}

void ExactEntropyEstimator::feed(std::uint32_t element) { ++counts_[element]; }

std::vector<std::uint8_t> ExactEntropyEstimator::snapshot() const {
  std::vector<std::uint8_t> out;
  out.reserve(28 + counts_.size() * 12);
  put_u64(out, m_);
  put_u32(out, n_);
  put_u64(out, pass_);
  put_u64(out, counts_.size());
  for (const auto& [symbol, count] : counts_) {
    put_u32(out, symbol);
    put_u64(out, count);
  }
  return out;
}

void ExactEntropyEstimator::resume(const std::vector<std::uint8_t>& state) {
  Reader r{state};
  m_ = r.u64();
  n_ = r.u32();
  pass_ = r.u64();
  std::uint64_t entries = r.u64();
  counts_.clear();
  for (std::uint64_t i = 0; i < entries; ++i) {
    std::uint32_t symbol = r.u32();
    counts_[symbol] = r.u64();
  }
  r.done();
}

double ExactEntropyEstimator::finish() {
  EmpiricalDistribution d;
  for (const auto& [symbol, count] : counts_) {
    d.counts[symbol] = count;
    d.m += count;
  }
  if (d.m == 0) throw StateError("finish before any element was fed");
  return exact_entropy(d);
}

std::uint64_t ExactEntropyEstimator::state_bits() const {
  return snapshot().size() * 8;
}

// --- McStreamingEstimator ---------------------------------------------------

McStreamingEstimator::McStreamingEstimator(std::uint64_t k, std::uint64_t seed)
    : k_(k), seed_(seed) {
  if (k == 0) throw DomainError("sample count k must be >= 1");
}

void McStreamingEstimator::reset(std::uint64_t m, std::uint32_t n) {
  if (m == 0) throw DomainError("declared stream length must be >= 1");
  m_ = m;
  n_ = n;
  cursor_ = 0;
  auto rng = make_rng(seed_);
  std::uniform_int_distribution<std::uint64_t> pick(1, m);
  positions_.resize(k_);
  for (auto& q : positions_) q = pick(rng);
  std::sort(positions_.begin(), positions_.end());
  latches_.assign(k_, 0);
  counters_.assign(k_, 0);
}

void McStreamingEstimator::begin_pass(std::uint64_t pass) {
  if (pass == 0) throw DomainError("passes are numbered from 1");
  if (pass > 1) {
    // One-pass algorithm: a re-read recomputes the same latches and counts.
    cursor_ = 0;
    latches_.assign(k_, 0);
    counters_.assign(k_, 0);
  }
}

void McStreamingEstimator::feed(std::uint32_t element) {
  ++cursor_;
  for (std::uint64_t i = 0; i < k_; ++i) {
    if (positions_[i] == cursor_) {
      latches_[i] = element;
      counters_[i] = 1;
    } else if (positions_[i] < cursor_ && latches_[i] == element) {
      ++counters_[i];
    }
  }
}

std::vector<std::uint8_t> McStreamingEstimator::snapshot() const {
  std::vector<std::uint8_t> out;
  out.reserve(36 + k_ * 20);
  put_u64(out, k_);
  put_u64(out, seed_);
  put_u64(out, m_);
  put_u32(out, n_);
  put_u64(out, cursor_);
  for (std::uint64_t q : positions_) put_u64(out, q);
  for (std::uint32_t v : latches_) put_u32(out, v);
  for (std::uint64_t c : counters_) put_u64(out, c);
  return out;
}

void McStreamingEstimator::resume(const std::vector<std::uint8_t>& state) {
  Reader r{state};
  k_ = r.u64();
  if (k_ == 0) throw ParseError("snapshot declares k=0");
  seed_ = r.u64();
  m_ = r.u64();
  n_ = r.u32();
  cursor_ = r.u64();
  positions_.resize(k_);
  for (auto& q : positions_) q = r.u64();
  latches_.resize(k_);
  for (auto& v : latches_) v = r.u32();
  counters_.resize(k_);
  for (auto& c : counters_) c = r.u64();
  r.done();
}

double McStreamingEstimator::finish() {
  if (cursor_ != m_)
    throw StateError("finish before the declared stream length was read");
  double sum = 0.0;
  for (std::uint64_t i = 0; i < k_; ++i) sum += x_of_r(counters_[i], m_);
  return sum / static_cast<double>(k_);
}

std::uint64_t McStreamingEstimator::state_bits() const {
  // Modeled footprint: k latch+position slots plus the pass cursor.
  return classical_mc_bits(m_, n_, k_) + ceil_log2(m_ + 1);
}

}  // namespace qse
