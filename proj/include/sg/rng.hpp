#pragma once

#include <cstdint>

namespace sg {

/// splitmix64 stream. Used everywhere a seeded source is needed so that
/// sampled runs are reproducible across platforms and standard libraries
/// (std:: distributions are not bit-stable between implementations).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool coin() { return (next() & 1ull) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace sg
