#include "emgpr/rng.hpp"

#include <cmath>
#include <numbers>

namespace emgpr {

std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                          std::uint64_t index) {
  // FNV-1a over the tag, mixed with the root and index through splitmix64.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t state = root;
  std::uint64_t mixed = splitmix64(state) ^ h;
  state = mixed + index * 0x9e3779b97f4a7c15ULL;
  return splitmix64(state);
}

double RandomSource::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; 1 - u keeps the log argument strictly positive.
  double u1 = 1.0 - uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

std::size_t RandomSource::index(std::size_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return static_cast<std::size_t>(r % n);
}

}  // namespace emgpr
