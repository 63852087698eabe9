#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "atlas/integer.hpp"
#include "atlas/qz.hpp"

namespace atlas {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Integer value;
};

// Immutable integer matrix.  Storage is compressed sparse rows; when more
// than a quarter of the entries are nonzero it switches to dense rows.
class IntMatrix {
public:
  static constexpr double kDenseThreshold = 0.25;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  // Duplicate (row, col) pairs are summed; zero results are dropped.
  static IntMatrix from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static IntMatrix from_dense(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept { return nnz_; }
  bool dense_storage() const noexcept { return dense_; }
  bool is_zero() const noexcept { return nnz_ == 0; }

  Integer at(std::size_t r, std::size_t c) const;

  // Calls fn(col, value) for every nonzero entry of row r, in column order.
  template <class Fn>
  void for_each_in_row(std::size_t r, Fn&& fn) const {
    if (dense_) {
      const Integer* row = values_.data() + r * cols_;
      for (std::size_t c = 0; c < cols_; ++c)
        if (!row[c].is_zero()) fn(c, row[c]);
    } else {
      for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) fn(std::size_t{col_idx_[k]}, values_[k]);
    }
  }

  std::vector<Triplet> triplets() const;
  std::vector<std::vector<Integer>> to_dense() const;
  IntMatrix transpose() const;

  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  // Integer matrices act on Q/Z vectors.
  QZVector apply(const QZVector& x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nnz_ = 0;
  bool dense_ = false;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> col_idx_;
  std::vector<Integer> values_;
};

}  // namespace atlas
