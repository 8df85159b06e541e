#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace spatialkit {

// splitmix64 finalizer; used to derive independent per-item streams.
std::uint64_t mix64(std::uint64_t value);

// Stable 64-bit FNV-1a hash, used to turn stream names into salts.
std::uint64_t fnv1a(std::string_view text);

// Seed for item `index` of the stream `salt` under `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index,
                          std::uint64_t salt = 0);

/// Seeded random source with platform-independent draws.
///
/// std::uniform_int_distribution and friends are implementation-defined, so
/// the bounded draws are done here on top of the standard mt19937_64 engine
/// to keep datasets byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

  // Uniform index in [0, n).
  std::size_t index(std::size_t n);

  // Uniform double in [0, 1).
  double uniform01();

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[index(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spatialkit
