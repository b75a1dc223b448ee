#pragma once

#include <atomic>
#include <filesystem>
#include <string>
#include <vector>

#include "emgpr/linalg.hpp"
#include "emgpr/rng.hpp"

namespace testutil {

// Unique scratch directory, removed on destruction.
struct TempDir {
  std::filesystem::path path;

  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("emgpr_test_" + tag + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

inline std::vector<double> random_vector(emgpr::RandomSource& rng, std::size_t n,
                                         double lo = -1.0, double hi = 1.0) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

inline emgpr::Matrix random_matrix(emgpr::RandomSource& rng, std::size_t rows,
                                   std::size_t cols, double lo = -1.0,
                                   double hi = 1.0) {
  emgpr::Matrix m(rows, cols);
  for (double& x : m.data()) x = rng.uniform(lo, hi);
  return m;
}

inline emgpr::Matrix random_symmetric(emgpr::RandomSource& rng, std::size_t d) {
  emgpr::Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      const double v = rng.uniform(-1.0, 1.0);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

}  // namespace testutil
