#pragma once

#include <cstdint>
#include <vector>

#include "qse/stream.hpp"

namespace qse {

// An entropy estimator that can be checkpointed mid-stream. snapshot/resume
// carry the complete working state through bytes, so a run may hop between
// parties (or machines) at arbitrary segment boundaries. Passes are numbered
// from 1; a re-read of the stream announces itself through begin_pass.
class StreamingEstimator {
public:
  virtual ~StreamingEstimator() = default;

  virtual void reset(std::uint64_t m, std::uint32_t n) = 0;
  virtual void begin_pass(std::uint64_t pass) = 0;
  virtual void feed(std::uint32_t element) = 0;
  virtual std::vector<std::uint8_t> snapshot() const = 0;
  virtual void resume(const std::vector<std::uint8_t>& state) = 0;
  virtual double finish() = 0;

  // Working-state footprint in bits as currently held.
  virtual std::uint64_t state_bits() const = 0;
};

// Reference estimator: full count table, exact plug-in entropy at finish.
class ExactEntropyEstimator final : public StreamingEstimator {
public:
  void reset(std::uint64_t m, std::uint32_t n) override;
  void begin_pass(std::uint64_t pass) override;
  void feed(std::uint32_t element) override;
  std::vector<std::uint8_t> snapshot() const override;
  void resume(const std::vector<std::uint8_t>& state) override;
  double finish() override;
  std::uint64_t state_bits() const override;

private:
  std::uint64_t m_ = 0;
  std::uint32_t n_ = 0;
  std::uint64_t pass_ = 0;
  std::map<std::uint32_t, std::uint64_t> counts_;
};

// One-pass uniform-position sampling baseline holding k latch+counter slots.
// Positions are drawn at reset time from the declared stream length.
class McStreamingEstimator final : public StreamingEstimator {
public:
  McStreamingEstimator(std::uint64_t k, std::uint64_t seed);

  void reset(std::uint64_t m, std::uint32_t n) override;
  void begin_pass(std::uint64_t pass) override;
  void feed(std::uint32_t element) override;
  std::vector<std::uint8_t> snapshot() const override;
  void resume(const std::vector<std::uint8_t>& state) override;
  double finish() override;
  std::uint64_t state_bits() const override;

private:
  std::uint64_t k_ = 0;
  std::uint64_t seed_ = 0;
  std::uint64_t m_ = 0;
  std::uint32_t n_ = 0;
  std::uint64_t cursor_ = 0;              // elements consumed in this pass
  std::vector<std::uint64_t> positions_;  // sorted sample positions, 1-based
  std::vector<std::uint32_t> latches_;    // symbol seen at each position
  std::vector<std::uint64_t> counters_;   // matches since the latch
};

}  // namespace qse
