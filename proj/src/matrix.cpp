#include "staircase/matrix.hpp"

#include <string>

namespace staircase {

FiberMatrix::FiberMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix must have at least one row and one column");
  if (data_.size() != rows_ * cols_) throw DimensionError("matrix entry count does not match rows * cols");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (data_[k] < 0) {
      throw DomainError("negative matrix entry at row " + std::to_string(k / cols_) + ", column " +
                        std::to_string(k % cols_));
    }
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    bool nonzero = false;
    for (std::size_t r = 0; r < rows_; ++r) nonzero = nonzero || (*this)(r, c) > 0;
    if (!nonzero) throw DomainError("matrix column " + std::to_string(c) + " is zero");
  }
}

namespace {

std::vector<std::int64_t> flatten(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                  std::size_t& ncols) {
  ncols = rows.size() ? rows.begin()->size() : 0;
  std::vector<std::int64_t> out;
  for (const auto& r : rows) {
    if (r.size() != ncols) throw DimensionError("ragged matrix rows");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace

FiberMatrix::FiberMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : FiberMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0, [&] {
        std::size_t n = 0;
        return flatten(rows, n);
      }()) {}

FiberMatrix FiberMatrix::identity(std::size_t n) {
  std::vector<std::int64_t> data(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) data[i * n + i] = 1;
  return FiberMatrix(n, n, std::move(data));
}

ExponentVector FiberMatrix::column(std::size_t c) const {
  std::vector<std::int64_t> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = (*this)(r, c);
  return ExponentVector(std::move(col));
}

Degree FiberMatrix::apply(const ExponentVector& u) const {
  require_same_dim(cols_, u.size(), "matrix apply");
  std::vector<std::int64_t> b(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) b[r] = checked_add(b[r], checked_mul((*this)(r, c), u[c]));
  }
  return Degree(std::move(b));
}

}  // namespace staircase
