#include "atlas/integer.hpp"

#include <limits>
#include <ostream>

#include "atlas/error.hpp"

namespace atlas {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Integer::Integer(const BigInt& v) : big_(std::make_unique<BigInt>(v)) { normalize(); }

Integer::Integer(const Integer& other)
    : small_(other.small_), big_(other.big_ ? std::make_unique<BigInt>(*other.big_) : nullptr) {}

Integer& Integer::operator=(const Integer& other) {
  if (this != &other) {
    small_ = other.small_;
    big_ = other.big_ ? std::make_unique<BigInt>(*other.big_) : nullptr;
  }
  return *this;
}

Integer Integer::parse(const std::string& text) {
  try {
    return Integer(BigInt(text));
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedSpec, "not an integer: '" + text + "'");
  }
}

void Integer::normalize() {
  if (big_ && *big_ >= kMin && *big_ <= kMax) {
    small_ = static_cast<std::int64_t>(*big_);
    big_.reset();
  }
}

int Integer::sign() const noexcept {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

std::optional<std::int64_t> Integer::to_int64() const noexcept {
  if (big_) return std::nullopt;
  return small_;
}

BigInt Integer::to_big() const { return big_ ? *big_ : BigInt(small_); }

std::string Integer::str() const { return big_ ? big_->str() : std::to_string(small_); }

Integer Integer::operator-() const {
  if (!big_ && small_ != kMin) return Integer(-small_);
  return Integer(BigInt(-to_big()));
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out;
    if (!__builtin_add_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  BigInt r = to_big() + rhs.to_big();
  big_ = std::make_unique<BigInt>(std::move(r));
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out;
    if (!__builtin_sub_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  BigInt r = to_big() - rhs.to_big();
  big_ = std::make_unique<BigInt>(std::move(r));
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out;
    if (!__builtin_mul_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  BigInt r = to_big() * rhs.to_big();
  big_ = std::make_unique<BigInt>(std::move(r));
  normalize();
  return *this;
}

void Integer::sub_mul(const Integer& f, const Integer& rhs) {
  if (!big_ && !f.big_ && !rhs.big_) {
    std::int64_t prod, out;
    if (!__builtin_mul_overflow(f.small_, rhs.small_, &prod) &&
        !__builtin_sub_overflow(small_, prod, &out)) {
      small_ = out;
      return;
    }
  }
  BigInt r = to_big() - f.to_big() * rhs.to_big();
  big_ = std::make_unique<BigInt>(std::move(r));
  normalize();
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  // normalize() guarantees big values never fit in int64
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = a.to_big().compare(b.to_big());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::InternalInconsistency, "division by zero");
  auto as = a.to_int64();
  auto bs = b.to_int64();
  if (as && bs && !(*as == kMin && *bs == -1)) {
    std::int64_t q = *as / *bs;
    std::int64_t r = *as % *bs;
    if (r != 0 && ((r < 0) != (*bs < 0))) --q;
    return Integer(q);
  }
  BigInt q, r;
  boost::multiprecision::divide_qr(a.to_big(), b.to_big(), q, r);
  if (r != 0 && ((r < 0) != (b.sign() < 0))) --q;
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

Integer nearest_div(const Integer& a, const Integer& b) {
  // floor((2a + |b|) / 2b) for b > 0, symmetric otherwise
  Integer q = floor_div(a, b);
  Integer r = a - q * b;  // same sign as b, |r| < |b|
  Integer twice = r + r;
  if (abs(twice) > abs(b)) q += Integer(1);
  return q;
}

Integer exact_div(const Integer& a, const Integer& b) {
  auto as = a.to_int64();
  auto bs = b.to_int64();
  if (as && bs && !(*as == kMin && *bs == -1)) return Integer(*as / *bs);
  return Integer(BigInt(a.to_big() / b.to_big()));
}

Integer gcd(const Integer& a, const Integer& b) {
  auto as = a.to_int64();
  auto bs = b.to_int64();
  if (as && bs && *as != kMin && *bs != kMin) {
    std::int64_t x = *as < 0 ? -*as : *as;
    std::int64_t y = *bs < 0 ? -*bs : *bs;
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  return Integer(BigInt(boost::multiprecision::gcd(a.to_big(), b.to_big())));
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(exact_div(a, gcd(a, b)) * b);
}

std::int64_t mod_small(const Integer& a, std::int64_t m) {
  if (auto s = a.to_int64()) {
    std::int64_t r = *s % m;
    return r < 0 ? r + m : r;
  }
  BigInt r = a.to_big() % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

}  // namespace atlas
