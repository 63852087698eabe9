#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "atlas/int_matrix.hpp"
#include "atlas/integer.hpp"
#include "atlas/qz.hpp"

namespace atlas {

// One elementary operation on coordinate vectors:
//   Add:    x[target] += factor * x[source]
//   Swap:   exchange x[target] and x[source]
//   Negate: x[target] = -x[target]
struct VectorOp {
  enum class Kind : std::uint8_t { Add, Swap, Negate };
  Kind kind = Kind::Add;
  std::uint32_t target = 0;
  std::uint32_t source = 0;
  Integer factor;
};

// An invertible integer matrix T = P * F_m * ... * F_1, kept as the log of
// elementary operations F_k followed by a permutation P with
// (P x)[k] = x[perm[k]].  Bar differentials have ~10^5 rows, so the
// transforms of a Smith reduction are never materialized unless asked.
class Unimodular {
public:
  Unimodular() = default;
  explicit Unimodular(std::size_t dim, bool tracked = true);

  std::size_t dim() const noexcept { return perm_.size(); }
  bool tracked() const noexcept { return tracked_; }
  std::size_t op_count() const noexcept { return ops_.size(); }

  void push(VectorOp op) {
    if (tracked_) ops_.push_back(std::move(op));
  }
  void set_permutation(std::vector<std::uint32_t> perm);

  // T x
  std::vector<Integer> apply(std::vector<Integer> x) const;
  QZVector apply(QZVector x) const;
  // T^{-1} y
  std::vector<Integer> apply_inverse(std::vector<Integer> y) const;
  QZVector apply_inverse(QZVector y) const;

  IntMatrix matrix() const;
  IntMatrix inverse_matrix() const;

private:
  template <class T>
  std::vector<T> forward(std::vector<T> x) const;
  template <class T>
  std::vector<T> backward(std::vector<T> y) const;
  void require_tracked() const;

  bool tracked_ = true;
  std::vector<VectorOp> ops_;
  std::vector<std::uint32_t> perm_;
};

struct SnfOptions {
  bool track_rows = true;     // keep U (needed to solve M x = b)
  bool track_columns = true;  // keep V (needed for kernels and coordinates)
};

// U * M * V = S with S diagonal, s_1 | s_2 | ... | s_rank all positive.
struct SnfResult {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::vector<Integer> diagonal;  // length rank
  Unimodular u;                   // U
  Unimodular v_inverse;           // V^{-1}

  IntMatrix s() const;
  IntMatrix u_matrix() const { return u.matrix(); }
  IntMatrix v_matrix() const { return v_inverse.inverse_matrix(); }

  template <class Vec>
  Vec apply_v(Vec y) const {
    return v_inverse.apply_inverse(std::move(y));
  }
  template <class Vec>
  Vec apply_v_inverse(Vec x) const {
    return v_inverse.apply(std::move(x));
  }

  // Invariant factors greater than one.
  std::vector<Integer> torsion() const;
};

SnfResult smith_normal_form(const IntMatrix& m, SnfOptions options = {});

// x with M x = target (mod 1), or nullopt when none exists.
std::optional<QZVector> solve_qz(const IntMatrix& m, const QZVector& target);
std::optional<QZVector> solve_qz(const SnfResult& snf, const QZVector& target);

// Integer solution of M x = b, or nullopt.
std::optional<std::vector<Integer>> solve_z(const SnfResult& snf, const std::vector<Integer>& b);

// Basis of the integer kernel {x in Z^cols : M x = 0}.
std::vector<std::vector<Integer>> kernel_basis(const SnfResult& snf);

// Invariant factors of K / im(M), where K is a saturated sublattice of
// Z^rows of rank `ambient_rank` containing im(M).  Factors greater than one
// come first; each free summand is reported as a trailing zero.
std::vector<Integer> cokernel_invariants(const IntMatrix& m, std::size_t ambient_rank);

}  // namespace atlas
