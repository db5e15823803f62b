#pragma once

#include <cstdint>

namespace d2p {

// splitmix64. Tiny, fast, and fully specified, so seeded runs produce the
// same orders and test data on every platform; stdlib distributions make no
// such promise.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n); the modulo bias is irrelevant at the sizes
  // used here (n <= 1000).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace d2p
