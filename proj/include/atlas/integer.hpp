#pragma once

#include <cstdint>
#include <compare>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace atlas {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision integer with an inline 64-bit fast path.
//
// Values that fit in int64 live in `small_` and never touch the heap; an
// overflowing operation promotes the result to a heap BigInt, and results
// that fit again are demoted.  Entries of bar differentials and of most
// elimination steps stay small, so this keeps sparse rows compact.
class Integer {
public:
  Integer() noexcept = default;
  Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT: implicit by design of arithmetic type
  Integer(int v) noexcept : small_(v) {}           // NOLINT
  explicit Integer(const BigInt& v);

  Integer(const Integer& other);
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  static Integer parse(const std::string& text);

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_unit() const noexcept { return !big_ && (small_ == 1 || small_ == -1); }
  int sign() const noexcept;
  std::optional<std::int64_t> to_int64() const noexcept;
  BigInt to_big() const;
  std::string str() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  // this -= f * rhs, the inner step of every row/column operation.
  void sub_mul(const Integer& f, const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

private:
  void normalize();

  std::int64_t small_ = 0;
  std::unique_ptr<BigInt> big_;
};

Integer abs(const Integer& v);

// Floor division: q = floor(a / b), r = a - q*b with 0 <= r < |b| for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

// Quotient rounded toward the nearest integer; used by the Euclidean
// pivot steps so remainders satisfy |r| <= |b|/2.
Integer nearest_div(const Integer& a, const Integer& b);

// Exact division; b must divide a.
Integer exact_div(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// a mod m as a machine integer in [0, m), m > 0.
std::int64_t mod_small(const Integer& a, std::int64_t m);

}  // namespace atlas
