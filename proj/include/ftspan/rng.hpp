#pragma once

#include <cstdint>

#include "ftspan/rational.hpp"

namespace ftspan {

/// Counter-based deterministic generator.  Every draw is a pure function of
/// the seed and up to four stream keys, so substreams (say, keyed by edge
/// id, tree index and sample index) are independent of evaluation order and
/// reproduce across platforms.
class StreamRng {
 public:
  explicit StreamRng(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }

  uint64_t draw(uint64_t k1 = 0, uint64_t k2 = 0, uint64_t k3 = 0, uint64_t k4 = 0) const;

  /// true with probability within 2^-64 of the rational p in [0, 1].
  bool bernoulli(const Rat& p, uint64_t k1 = 0, uint64_t k2 = 0, uint64_t k3 = 0,
                 uint64_t k4 = 0) const;

  /// Uniform value in [0, bound); bound must be positive.
  uint64_t uniform(uint64_t bound, uint64_t k1 = 0, uint64_t k2 = 0, uint64_t k3 = 0,
                   uint64_t k4 = 0) const;

 private:
  uint64_t seed_;
};

}  // namespace ftspan
