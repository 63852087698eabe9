#include "atlas/int_matrix.hpp"

#include <algorithm>

#include "atlas/error.hpp"

namespace atlas {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

IntMatrix IntMatrix::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
  for (const Triplet& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw Error(ErrorKind::DimensionMismatch, "triplet index out of range");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  // merge duplicates, drop zeros
  std::vector<Triplet> merged;
  merged.reserve(entries.size());
  for (Triplet& t : entries) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col) {
      merged.back().value += t.value;
    } else {
      if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();

  IntMatrix m(rows, cols);
  m.nnz_ = merged.size();
  const double cells = static_cast<double>(rows) * static_cast<double>(cols);
  m.dense_ = cells > 0 && static_cast<double>(m.nnz_) > kDenseThreshold * cells;
  if (m.dense_) {
    m.values_.assign(rows * cols, Integer{});
    for (Triplet& t : merged) m.values_[t.row * cols + t.col] = std::move(t.value);
    m.row_ptr_.clear();
    return m;
  }
  m.col_idx_.reserve(merged.size());
  m.values_.reserve(merged.size());
  for (Triplet& t : merged) {
    ++m.row_ptr_[t.row + 1];
    m.col_idx_.push_back(static_cast<std::uint32_t>(t.col));
    m.values_.push_back(std::move(t.value));
  }
  for (std::size_t r = 0; r < rows; ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<Integer>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw Error(ErrorKind::DimensionMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < ncols; ++c)
      if (!rows[r][c].is_zero()) entries.push_back({r, c, rows[r][c]});
  }
  return from_triplets(rows.size(), ncols, std::move(entries));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  std::vector<Triplet> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) entries.push_back({i, i, Integer(1)});
  return from_triplets(n, n, std::move(entries));
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::DimensionMismatch, "matrix index out of range");
  if (dense_) return values_[r * cols_ + c];
  auto first = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r]);
  auto last = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r + 1]);
  auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(c));
  if (it != last && *it == c) return values_[static_cast<std::size_t>(it - col_idx_.begin())];
  return Integer{};
}

std::vector<Triplet> IntMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz_);
  for (std::size_t r = 0; r < rows_; ++r)
    for_each_in_row(r, [&](std::size_t c, const Integer& v) { out.push_back({r, c, v}); });
  return out;
}

std::vector<std::vector<Integer>> IntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for_each_in_row(r, [&](std::size_t c, const Integer& v) { out[r][c] = v; });
  return out;
}

IntMatrix IntMatrix::transpose() const {
  std::vector<Triplet> t = triplets();
  for (Triplet& e : t) std::swap(e.row, e.col);
  return from_triplets(cols_, rows_, std::move(t));
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match columns");
  std::vector<Integer> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for_each_in_row(r, [&](std::size_t c, const Integer& v) { y[r] += v * x[c]; });
  return y;
}

QZVector IntMatrix::apply(const QZVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match columns");
  QZVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for_each_in_row(r, [&](std::size_t c, const Integer& v) { y[r] += x[c].scaled(v); });
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  std::vector<Triplet> out;
  std::vector<Integer> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    cols.clear();
    a.for_each_in_row(r, [&](std::size_t k, const Integer& av) {
      b.for_each_in_row(k, [&](std::size_t c, const Integer& bv) {
        if (!touched[c]) {
          touched[c] = 1;
          cols.push_back(c);
        }
        acc[c] += av * bv;
      });
    });
    for (std::size_t c : cols) {
      if (!acc[c].is_zero()) out.push_back({r, c, acc[c]});
      acc[c] = Integer{};
      touched[c] = 0;
    }
  }
  return IntMatrix::from_triplets(a.rows_, b.cols_, std::move(out));
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.nnz_ != b.nnz_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    bool same = true;
    a.for_each_in_row(r, [&](std::size_t c, const Integer& v) {
      if (b.at(r, c) != v) same = false;
    });
    if (!same) return false;
  }
  return true;
}

}  // namespace atlas
