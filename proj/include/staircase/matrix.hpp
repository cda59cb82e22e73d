#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "staircase/exponent.hpp"

namespace staircase {

/// A d x n matrix of nonnegative integers with no zero column, read as the
/// linear map u -> A u from N^n to N^d. The no-zero-column condition makes
/// every preimage of a degree finite.
class FiberMatrix {
 public:
  FiberMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major);
  FiberMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static FiberMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  ExponentVector column(std::size_t c) const;

  /// A u, with checked arithmetic.
  Degree apply(const ExponentVector& u) const;

  friend bool operator==(const FiberMatrix&, const FiberMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

}  // namespace staircase
