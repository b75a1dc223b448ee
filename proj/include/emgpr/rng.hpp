#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace emgpr {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derive an independent stream seed from a root seed, a short tag
/// ("split", "init", "smo", "synth", ...) and an optional index, so that
/// components can be reseeded independently of one another.
std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t index = 0);

// mt19937_64 output is bit-exact across platforms; the standard library
// distributions are not, so uniform and Gaussian draws are mapped explicitly.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller.
  double gaussian();

  /// Uniform integer in [0, n), without modulo bias.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Seeded Fisher-Yates shuffle.
template <typename T>
void shuffle_inplace(std::vector<T>& v, RandomSource& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.index(i)]);
  }
}

}  // namespace emgpr
