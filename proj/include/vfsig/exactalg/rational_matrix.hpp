#pragma once

#include "vfsig/exactalg/bigint.hpp"

#include <cstddef>
#include <vector>

namespace vfsig {

// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigRational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigRational> data_;
};

// Rank by exact Gaussian elimination. Takes a copy; the input is untouched.
std::size_t rank(RationalMatrix m);

}  // namespace vfsig
