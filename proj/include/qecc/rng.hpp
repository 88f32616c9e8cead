#pragma once

#include <cstdint>
#include <random>

namespace qecc {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial seed derivation: trials are order-independent and mergeable
// because trial i always sees the same stream regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) + index);
}

// Deterministic uniform source. mt19937_64 is fully specified by the
// standard and uniform01 avoids std::uniform_real_distribution, whose
// output is implementation-defined, so identical seeds give identical
// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound).
  int below(int bound) {
    const int v = static_cast<int>(uniform01() * bound);
    return v < bound ? v : bound - 1;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qecc
