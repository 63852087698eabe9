#include "atlas/snf.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <utility>

#include "atlas/error.hpp"

namespace atlas {

// ---------------------------------------------------------------------------
// Unimodular

namespace {

inline void add_scaled(Integer& a, const Integer& f, const Integer& b) {
  if (!b.is_zero()) a.sub_mul(-f, b);
}

inline void add_scaled(QZ& a, const Integer& f, const QZ& b) {
  if (!b.is_zero()) a += b.scaled(f);
}

inline void sub_scaled(Integer& a, const Integer& f, const Integer& b) {
  if (!b.is_zero()) a.sub_mul(f, b);
}

inline void sub_scaled(QZ& a, const Integer& f, const QZ& b) {
  if (!b.is_zero()) a -= b.scaled(f);
}

inline Integer negated(const Integer& v) { return -v; }
inline QZ negated(const QZ& v) { return -v; }

}  // namespace

Unimodular::Unimodular(std::size_t dim, bool tracked) : tracked_(tracked), perm_(dim) {
  std::iota(perm_.begin(), perm_.end(), 0u);
}

void Unimodular::set_permutation(std::vector<std::uint32_t> perm) {
  if (perm.size() != perm_.size()) throw Error(ErrorKind::DimensionMismatch, "permutation size");
  perm_ = std::move(perm);
}

void Unimodular::require_tracked() const {
  if (!tracked_) {
    throw Error(ErrorKind::InternalInconsistency, "transform was not tracked during reduction");
  }
}

template <class T>
std::vector<T> Unimodular::forward(std::vector<T> x) const {
  require_tracked();
  if (x.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "transform applied to wrong length");
  for (const VectorOp& op : ops_) {
    switch (op.kind) {
      case VectorOp::Kind::Add: add_scaled(x[op.target], op.factor, x[op.source]); break;
      case VectorOp::Kind::Swap: std::swap(x[op.target], x[op.source]); break;
      case VectorOp::Kind::Negate: x[op.target] = negated(x[op.target]); break;
    }
  }
  std::vector<T> y(x.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) y[k] = std::move(x[perm_[k]]);
  return y;
}

template <class T>
std::vector<T> Unimodular::backward(std::vector<T> y) const {
  require_tracked();
  if (y.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "transform applied to wrong length");
  std::vector<T> x(y.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) x[perm_[k]] = std::move(y[k]);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    const VectorOp& op = *it;
    switch (op.kind) {
      case VectorOp::Kind::Add: sub_scaled(x[op.target], op.factor, x[op.source]); break;
      case VectorOp::Kind::Swap: std::swap(x[op.target], x[op.source]); break;
      case VectorOp::Kind::Negate: x[op.target] = negated(x[op.target]); break;
    }
  }
  return x;
}

std::vector<Integer> Unimodular::apply(std::vector<Integer> x) const { return forward(std::move(x)); }
QZVector Unimodular::apply(QZVector x) const { return forward(std::move(x)); }
std::vector<Integer> Unimodular::apply_inverse(std::vector<Integer> y) const { return backward(std::move(y)); }
QZVector Unimodular::apply_inverse(QZVector y) const { return backward(std::move(y)); }

IntMatrix Unimodular::matrix() const {
  std::vector<Triplet> entries;
  for (std::size_t k = 0; k < dim(); ++k) {
    std::vector<Integer> e(dim());
    e[k] = 1;
    auto col = apply(std::move(e));
    for (std::size_t r = 0; r < col.size(); ++r)
      if (!col[r].is_zero()) entries.push_back({r, k, col[r]});
  }
  return IntMatrix::from_triplets(dim(), dim(), std::move(entries));
}

IntMatrix Unimodular::inverse_matrix() const {
  std::vector<Triplet> entries;
  for (std::size_t k = 0; k < dim(); ++k) {
    std::vector<Integer> e(dim());
    e[k] = 1;
    auto col = apply_inverse(std::move(e));
    for (std::size_t r = 0; r < col.size(); ++r)
      if (!col[r].is_zero()) entries.push_back({r, k, col[r]});
  }
  return IntMatrix::from_triplets(dim(), dim(), std::move(entries));
}

// ---------------------------------------------------------------------------
// Elimination engine

namespace {

struct Entry {
  std::uint32_t col;
  Integer val;
};
using Row = std::vector<Entry>;

struct Pivot {
  std::uint32_t row;
  std::uint32_t col;
  Integer value;
};

const Integer* find_in_row(const Row& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const Entry& e, std::uint32_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? &it->val : nullptr;
}

// Sparse elimination in two phases.  Phase one eliminates unit pivots with
// a Markowitz-style choice (sparsest column, then shortest row), which
// disposes of almost all of the rank of a bar differential without any
// coefficient growth.  Phase two runs Euclidean pivoting on what is left.
// Row operations are logged into U, column operations into V^{-1}.
class Eliminator {
public:
  Eliminator(const IntMatrix& m, const SnfOptions& options)
      : nrows_(m.rows()),
        ncols_(m.cols()),
        rows_(m.rows()),
        col_rows_(m.cols()),
        col_count_(m.cols(), 0),
        row_alive_(m.rows(), 1),
        col_alive_(m.cols(), 1),
        col_dirty_(m.cols(), 0),
        deferred_(m.cols(), 0),
        u_(m.rows(), options.track_rows),
        v_inverse_(m.cols(), options.track_columns) {
    for (std::size_t r = 0; r < nrows_; ++r) {
      m.for_each_in_row(r, [&](std::size_t c, const Integer& v) {
        rows_[r].push_back({static_cast<std::uint32_t>(c), v});
        col_rows_[c].push_back(static_cast<std::uint32_t>(r));
        ++col_count_[c];
      });
    }
  }

  SnfResult run() {
    unit_phase();
    euclid_phase();
    return finish();
  }

private:
  // Alive rows with a nonzero entry in column c; compacts the index.
  std::vector<std::uint32_t>& rows_in_column(std::uint32_t c) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](std::uint32_t r) { return !row_alive_[r] || !find_in_row(rows_[r], c); }),
               list.end());
    return list;
  }

  void mark_dirty(std::uint32_t c) {
    if (!col_dirty_[c]) {
      col_dirty_[c] = 1;
      dirty_.push_back(c);
    }
  }

  // row_i -= f * row_p
  void row_axpy(std::uint32_t i, const Integer& f, std::uint32_t p) {
    if (f.is_zero()) return;
    u_.push({VectorOp::Kind::Add, i, p, -f});
    const Row& src = rows_[p];
    Row& dst = rows_[i];
    scratch_.clear();
    scratch_.reserve(dst.size() + src.size());
    auto a = dst.begin();
    auto b = src.begin();
    while (a != dst.end() || b != src.end()) {
      if (b == src.end() || (a != dst.end() && a->col < b->col)) {
        scratch_.push_back(std::move(*a));
        ++a;
      } else if (a == dst.end() || b->col < a->col) {
        Entry e{b->col, Integer(0)};
        e.val.sub_mul(f, b->val);
        col_rows_[b->col].push_back(i);
        ++col_count_[b->col];
        mark_dirty(b->col);
        scratch_.push_back(std::move(e));
        ++b;
      } else {
        a->val.sub_mul(f, b->val);
        mark_dirty(a->col);
        if (a->val.is_zero()) {
          --col_count_[a->col];
        } else {
          scratch_.push_back(std::move(*a));
        }
        ++a;
        ++b;
      }
    }
    dst.swap(scratch_);
  }

  // col_j -= f * col_q
  void col_axpy(std::uint32_t j, const Integer& f, std::uint32_t q) {
    if (f.is_zero()) return;
    v_inverse_.push({VectorOp::Kind::Add, q, j, f});
    std::vector<std::uint32_t> touched = rows_in_column(q);
    for (std::uint32_t r : touched) {
      Row& row = rows_[r];
      Integer aq = *find_in_row(row, q);
      auto it = std::lower_bound(row.begin(), row.end(), j,
                                 [](const Entry& e, std::uint32_t c) { return e.col < c; });
      if (it != row.end() && it->col == j) {
        it->val.sub_mul(f, aq);
        if (it->val.is_zero()) {
          row.erase(it);
          --col_count_[j];
        }
      } else {
        Entry e{j, Integer(0)};
        e.val.sub_mul(f, aq);
        row.insert(it, std::move(e));
        col_rows_[j].push_back(r);
        ++col_count_[j];
      }
    }
    mark_dirty(j);
  }

  void retire(std::uint32_t p, std::uint32_t q, Integer value) {
    for (const Entry& e : rows_[p]) {
      --col_count_[e.col];
      mark_dirty(e.col);
    }
    row_alive_[p] = 0;
    col_alive_[q] = 0;
    pivots_.push_back({p, q, std::move(value)});
  }

  void eliminate_unit(std::uint32_t p, std::uint32_t q) {
    const Integer u = *find_in_row(rows_[p], q);  // +-1, its own inverse
    std::vector<std::uint32_t> others = rows_in_column(q);
    for (std::uint32_t i : others) {
      if (i == p) continue;
      Integer f = *find_in_row(rows_[i], q) * u;
      row_axpy(i, f, p);
    }
    // Column q now meets only row p; clearing row p by column operations
    // touches nothing else, so it is only logged.
    for (const Entry& e : rows_[p]) {
      if (e.col == q) continue;
      v_inverse_.push({VectorOp::Kind::Add, q, e.col, e.val * u});
    }
    retire(p, q, u);
  }

  void unit_phase() {
    using Item = std::pair<std::uint32_t, std::uint32_t>;  // (count, col)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::uint32_t c = 0; c < ncols_; ++c)
      if (col_count_[c] > 0) heap.push({col_count_[c], c});

    while (!heap.empty()) {
      auto [count, q] = heap.top();
      heap.pop();
      if (!col_alive_[q] || deferred_[q] || col_count_[q] == 0) continue;
      if (count != col_count_[q]) {
        heap.push({col_count_[q], q});
        continue;
      }
      std::uint32_t best = UINT32_MAX;
      std::size_t best_len = SIZE_MAX;
      for (std::uint32_t r : rows_in_column(q)) {
        const Integer* v = find_in_row(rows_[r], q);
        if (v->is_unit() && rows_[r].size() < best_len) {
          best = r;
          best_len = rows_[r].size();
        }
      }
      if (best == UINT32_MAX) {
        deferred_[q] = 1;
        continue;
      }
      for (std::uint32_t c : dirty_) col_dirty_[c] = 0;
      dirty_.clear();
      eliminate_unit(best, q);
      // a deferred column whose entries changed may have acquired a unit
      for (std::uint32_t c : dirty_) {
        col_dirty_[c] = 0;
        if (deferred_[c] && col_alive_[c] && col_count_[c] > 0) {
          deferred_[c] = 0;
          heap.push({col_count_[c], c});
        }
      }
      dirty_.clear();
    }
  }

  // Alive entry of minimal absolute value; ties go to the shortest row.
  bool smallest_entry(std::uint32_t& p, std::uint32_t& q) {
    const Integer* best = nullptr;
    std::size_t best_len = SIZE_MAX;
    for (std::uint32_t r = 0; r < nrows_; ++r) {
      if (!row_alive_[r]) continue;
      for (const Entry& e : rows_[r]) {
        if (!col_alive_[e.col]) continue;
        bool better = !best;
        if (best) {
          auto c = abs(e.val) <=> abs(*best);
          better = c < 0 || (c == 0 && rows_[r].size() < best_len);
        }
        if (better) {
          best = &e.val;
          best_len = rows_[r].size();
          p = r;
          q = e.col;
        }
      }
    }
    return best != nullptr;
  }

  void euclid_phase() {
    std::uint32_t p = 0, q = 0;
    while (smallest_entry(p, q)) {
      for (;;) {
        const Integer a = *find_in_row(rows_[p], q);
        // clear column q below/above the pivot
        std::uint32_t next_row = UINT32_MAX;
        Integer next_abs;
        std::vector<std::uint32_t> others = rows_in_column(q);
        for (std::uint32_t i : others) {
          if (i == p) continue;
          Integer t = nearest_div(*find_in_row(rows_[i], q), a);
          row_axpy(i, t, p);
          if (const Integer* rem = find_in_row(rows_[i], q)) {
            if (next_row == UINT32_MAX || abs(*rem) < next_abs) {
              next_row = i;
              next_abs = abs(*rem);
            }
          }
        }
        if (next_row != UINT32_MAX) {
          p = next_row;
          continue;
        }
        // column q meets only row p: clear the rest of row p
        std::uint32_t next_col = UINT32_MAX;
        std::vector<std::pair<std::uint32_t, Integer>> row_entries;
        for (const Entry& e : rows_[p])
          if (e.col != q) row_entries.push_back({e.col, e.val});
        for (auto& [j, v] : row_entries) {
          col_axpy(j, nearest_div(v, a), q);
        }
        for (const Entry& e : rows_[p]) {
          if (e.col == q) continue;
          if (next_col == UINT32_MAX || abs(e.val) < next_abs) {
            next_col = e.col;
            next_abs = abs(e.val);
          }
        }
        if (next_col != UINT32_MAX) {
          q = next_col;
          continue;
        }
        retire(p, q, a);
        break;
      }
    }
  }

  // Replace isolated pivots a at (P, X) and b at (Q, Y) by gcd and lcm.
  void gcd_lcm(Pivot& first, Pivot& second) {
    std::uint32_t P = first.row, Q = second.row;
    std::uint32_t X = first.col, Y = second.col;
    // block [[x, y], [z, w]] on rows (P, Q), columns (X, Y)
    Integer x = first.value, y = 0, z = 0, w = second.value;
    // row P += row Q
    u_.push({VectorOp::Kind::Add, P, Q, Integer(1)});
    y = w;
    while (!y.is_zero()) {
      Integer t = nearest_div(x, y);
      // col X -= t col Y
      v_inverse_.push({VectorOp::Kind::Add, Y, X, t});
      x.sub_mul(t, y);
      z.sub_mul(t, w);
      std::swap(x, y);
      std::swap(z, w);
      std::swap(X, Y);
    }
    // row P = [x at X, 0 at Y]; row Q = [z, w]
    Integer k = exact_div(z, x);
    u_.push({VectorOp::Kind::Add, Q, P, -k});
    if (x.sign() < 0) {
      u_.push({VectorOp::Kind::Negate, P, P, Integer(0)});
      x = -x;
    }
    if (w.sign() < 0) {
      u_.push({VectorOp::Kind::Negate, Q, Q, Integer(0)});
      w = -w;
    }
    first = {P, X, x};
    second = {Q, Y, w};
  }

  SnfResult finish() {
    for (Pivot& pv : pivots_) {
      if (pv.value.sign() < 0) {
        u_.push({VectorOp::Kind::Negate, pv.row, pv.row, Integer(0)});
        pv.value = -pv.value;
      }
    }
    // unit pivots first, then make the rest a divisibility chain
    std::stable_partition(pivots_.begin(), pivots_.end(), [](const Pivot& pv) { return pv.value == Integer(1); });
    std::size_t first_nonunit = 0;
    while (first_nonunit < pivots_.size() && pivots_[first_nonunit].value == Integer(1)) ++first_nonunit;
    std::sort(pivots_.begin() + static_cast<std::ptrdiff_t>(first_nonunit), pivots_.end(),
              [](const Pivot& a, const Pivot& b) { return a.value < b.value; });
    for (std::size_t i = first_nonunit; i < pivots_.size(); ++i) {
      for (std::size_t j = i + 1; j < pivots_.size(); ++j) {
        if (!floor_mod(pivots_[j].value, pivots_[i].value).is_zero()) gcd_lcm(pivots_[i], pivots_[j]);
      }
    }

    SnfResult out;
    out.rows = nrows_;
    out.cols = ncols_;
    out.rank = pivots_.size();
    std::vector<std::uint32_t> row_perm, col_perm;
    std::vector<char> row_used(nrows_, 0), col_used(ncols_, 0);
    for (Pivot& pv : pivots_) {
      out.diagonal.push_back(pv.value);
      row_perm.push_back(pv.row);
      col_perm.push_back(pv.col);
      row_used[pv.row] = 1;
      col_used[pv.col] = 1;
    }
    for (std::uint32_t r = 0; r < nrows_; ++r)
      if (!row_used[r]) row_perm.push_back(r);
    for (std::uint32_t c = 0; c < ncols_; ++c)
      if (!col_used[c]) col_perm.push_back(c);
    u_.set_permutation(std::move(row_perm));
    v_inverse_.set_permutation(std::move(col_perm));
    out.u = std::move(u_);
    out.v_inverse = std::move(v_inverse_);
    return out;
  }

  std::size_t nrows_;
  std::size_t ncols_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::uint32_t> col_count_;
  std::vector<char> row_alive_;
  std::vector<char> col_alive_;
  std::vector<char> col_dirty_;
  std::vector<char> deferred_;
  std::vector<std::uint32_t> dirty_;
  Row scratch_;
  std::vector<Pivot> pivots_;
  Unimodular u_;
  Unimodular v_inverse_;
};

}  // namespace

// ---------------------------------------------------------------------------

IntMatrix SnfResult::s() const {
  std::vector<Triplet> entries;
  for (std::size_t k = 0; k < rank; ++k) entries.push_back({k, k, diagonal[k]});
  return IntMatrix::from_triplets(rows, cols, std::move(entries));
}

std::vector<Integer> SnfResult::torsion() const {
  std::vector<Integer> out;
  for (const Integer& d : diagonal)
    if (d > Integer(1)) out.push_back(d);
  return out;
}

SnfResult smith_normal_form(const IntMatrix& m, SnfOptions options) {
  if (m.rows() > UINT32_MAX || m.cols() > UINT32_MAX) {
    throw Error(ErrorKind::TooLarge, "matrix dimensions exceed 32-bit indexing");
  }
  return Eliminator(m, options).run();
}

std::optional<QZVector> solve_qz(const IntMatrix& m, const QZVector& target) {
  if (target.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "target length must equal rows");
  return solve_qz(smith_normal_form(m), target);
}

std::optional<QZVector> solve_qz(const SnfResult& snf, const QZVector& target) {
  if (target.size() != snf.rows) throw Error(ErrorKind::DimensionMismatch, "target length must equal rows");
  QZVector t = snf.u.apply(target);
  for (std::size_t k = snf.rank; k < snf.rows; ++k)
    if (!t[k].is_zero()) return std::nullopt;
  QZVector y(snf.cols);
  for (std::size_t k = 0; k < snf.rank; ++k) y[k] = t[k].divided_lift(snf.diagonal[k]);
  return snf.apply_v(std::move(y));
}

std::optional<std::vector<Integer>> solve_z(const SnfResult& snf, const std::vector<Integer>& b) {
  if (b.size() != snf.rows) throw Error(ErrorKind::DimensionMismatch, "right-hand side length must equal rows");
  std::vector<Integer> t = snf.u.apply(b);
  for (std::size_t k = snf.rank; k < snf.rows; ++k)
    if (!t[k].is_zero()) return std::nullopt;
  std::vector<Integer> y(snf.cols);
  for (std::size_t k = 0; k < snf.rank; ++k) {
    if (!floor_mod(t[k], snf.diagonal[k]).is_zero()) return std::nullopt;
    y[k] = exact_div(t[k], snf.diagonal[k]);
  }
  return snf.apply_v(std::move(y));
}

std::vector<std::vector<Integer>> kernel_basis(const SnfResult& snf) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t k = snf.rank; k < snf.cols; ++k) {
    std::vector<Integer> e(snf.cols);
    e[k] = 1;
    out.push_back(snf.apply_v(std::move(e)));
  }
  return out;
}

std::vector<Integer> cokernel_invariants(const IntMatrix& m, std::size_t ambient_rank) {
  SnfResult snf = smith_normal_form(m, {false, false});
  if (ambient_rank > m.rows() || ambient_rank < snf.rank) {
    throw Error(ErrorKind::DimensionMismatch, "ambient rank must lie between rank(M) and rows(M)");
  }
  std::vector<Integer> out = snf.torsion();
  for (std::size_t k = snf.rank; k < ambient_rank; ++k) out.push_back(Integer(0));
  return out;
}

}  // namespace atlas
