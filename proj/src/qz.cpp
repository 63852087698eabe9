#include "atlas/qz.hpp"

#include <numeric>
#include <ostream>

#include "atlas/error.hpp"

namespace atlas {

namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t out;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw Error(ErrorKind::InternalInconsistency, "Q/Z denominator overflow");
  }
  return out;
}

}  // namespace

QZ::QZ(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(ErrorKind::MalformedSpec, "Q/Z denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

QZ QZ::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      std::int64_t n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return QZ(n, 1);
    }
    std::string a = text.substr(0, slash);
    std::string b = text.substr(slash + 1);
    std::int64_t n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    std::int64_t d = std::stoll(b, &used);
    if (used != b.size() || d <= 0) throw std::invalid_argument(text);
    return QZ(n, d);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::MalformedSpec, "not a fraction: '" + text + "'");
  }
}

std::string QZ::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

QZ QZ::operator-() const { return QZ(den_ - num_, den_); }

QZ& QZ::operator+=(const QZ& rhs) {
  if (rhs.num_ == 0) return *this;
  if (den_ == rhs.den_) return *this = QZ(num_ + rhs.num_, den_);
  std::int64_t d = checked_lcm(den_, rhs.den_);
  return *this = QZ(num_ * (d / den_) + rhs.num_ * (d / rhs.den_), d);
}

QZ& QZ::operator-=(const QZ& rhs) { return *this += -rhs; }

QZ& QZ::operator*=(std::int64_t k) {
  std::int64_t kr = k % den_;
  if (kr < 0) kr += den_;
  return *this = QZ(static_cast<std::int64_t>(static_cast<__int128>(num_) * kr % den_), den_);
}

QZ QZ::scaled(const Integer& k) const {
  if (num_ == 0) return {};
  QZ out = *this;
  out *= mod_small(k, den_);
  return out;
}

QZ QZ::divided_lift(const Integer& k) const {
  auto ks = k.to_int64();
  if (!ks || *ks <= 0) throw Error(ErrorKind::InternalInconsistency, "Q/Z division by a non-positive or huge integer");
  std::int64_t d;
  if (__builtin_mul_overflow(den_, *ks, &d)) {
    throw Error(ErrorKind::InternalInconsistency, "Q/Z denominator overflow");
  }
  return QZ(num_, d);
}

std::ostream& operator<<(std::ostream& os, const QZ& v) { return os << v.num() << '/' << v.den(); }

std::int64_t common_denominator(const QZVector& v) {
  std::int64_t d = 1;
  for (const QZ& x : v) d = checked_lcm(d, x.den());
  return d;
}

bool is_zero(const QZVector& v) {
  for (const QZ& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace atlas
