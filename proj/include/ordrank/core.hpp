#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordrank {

// Error raised for malformed input files, bad configuration values and
// violated data preconditions.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Error raised when training encounters non-finite arithmetic.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dense row-major matrix of doubles. Deliberately minimal: the network code
// only needs indexed access and elementwise arithmetic.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

  bool same_shape(const Matrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
};

}  // namespace ordrank
