#pragma once

#include <cstdint>

namespace hhs {

// splitmix64: a tiny, platform-independent generator so seeded reports are
// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int below_int(int n) { return int(below(std::uint64_t(n))); }

 private:
  std::uint64_t state_;
};

}  // namespace hhs
