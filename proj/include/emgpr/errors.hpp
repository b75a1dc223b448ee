#pragma once

#include <stdexcept>
#include <string>

namespace emgpr {

// Unreadable or malformed input data: missing files, bad CSV, wrong shape.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: non-convergence, divergence, non-finite intermediates.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace emgpr
