#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "atlas/integer.hpp"

namespace atlas {

// An element of Q/Z, stored as a reduced fraction num/den with
// 0 <= num < den, gcd(num, den) = 1, and den = 1 exactly when num = 0.
class QZ {
public:
  constexpr QZ() noexcept = default;
  // num/den reduced into [0, 1); den must be positive.
  QZ(std::int64_t num, std::int64_t den);

  static QZ parse(const std::string& text);  // "num/den" or an integer

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  std::string str() const;

  QZ operator-() const;
  QZ& operator+=(const QZ& rhs);
  QZ& operator-=(const QZ& rhs);
  // Multiplication by an integer is well defined on Q/Z.
  QZ& operator*=(std::int64_t k);
  QZ scaled(const Integer& k) const;

  // x with k*x = this, choosing the lift of this in [0, 1): (num/den)/k.
  QZ divided_lift(const Integer& k) const;

  friend QZ operator+(QZ a, const QZ& b) { return a += b; }
  friend QZ operator-(QZ a, const QZ& b) { return a -= b; }
  friend QZ operator*(QZ a, std::int64_t k) { return a *= k; }
  friend QZ operator*(std::int64_t k, QZ a) { return a *= k; }

  friend bool operator==(const QZ&, const QZ&) = default;
  friend auto operator<=>(const QZ& a, const QZ& b) {
    // compare as rationals in [0, 1)
    return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const QZ& v);

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using QZVector = std::vector<QZ>;

// Least common multiple of all denominators (1 for the zero vector).
std::int64_t common_denominator(const QZVector& v);

bool is_zero(const QZVector& v);

}  // namespace atlas
