#include <catch_amalgamated.hpp>

#include <random>

#include "atlas/error.hpp"
#include "atlas/integer.hpp"
#include "atlas/qz.hpp"

#include <boost/multiprecision/cpp_int.hpp>

using namespace atlas;
using Big = boost::multiprecision::cpp_int;

namespace {

Big as_big(const Integer& v) { return Big(v.str()); }

}  // namespace

TEST_CASE("Integer small arithmetic", "[integer]") {
  Integer a(7), b(-3);
  CHECK((a + b) == Integer(4));
  CHECK((a - b) == Integer(10));
  CHECK((a * b) == Integer(-21));
  CHECK(floor_div(a, b) == Integer(-3));
  CHECK(floor_mod(a, b) == Integer(-2));
  CHECK(floor_mod(Integer(-7), Integer(3)) == Integer(2));
  CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
  CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
  CHECK(mod_small(Integer(-1), 5) == 4);
  CHECK(Integer(1).is_unit());
  CHECK(Integer(-1).is_unit());
  CHECK_FALSE(Integer(2).is_unit());
}

TEST_CASE("Integer promotes past 64 bits and demotes back", "[integer]") {
  Integer big(std::numeric_limits<std::int64_t>::max());
  big += Integer(1);
  CHECK_FALSE(big.is_small());
  CHECK(big.str() == "9223372036854775808");
  big -= Integer(1);
  CHECK(big.is_small());
  Integer sq = Integer(std::int64_t{1} << 40) * Integer(std::int64_t{1} << 40);
  CHECK(sq.str() == "1208925819614629174706176");
  CHECK(exact_div(sq, Integer(std::int64_t{1} << 40)) == Integer(std::int64_t{1} << 40));
  CHECK(Integer::parse("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
}

TEST_CASE("Integer agrees with cpp_int on random operands", "[integer][property]") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> pick(std::numeric_limits<std::int64_t>::min() / 2,
                                                   std::numeric_limits<std::int64_t>::max() / 2);
  for (int trial = 0; trial < 2000; ++trial) {
    Integer a(pick(rng)), b(pick(rng));
    if (trial % 3 == 0) a *= Integer(pick(rng));
    if (b.is_zero()) continue;
    const Big A = as_big(a), B = as_big(b);
    REQUIRE(as_big(a + b) == A + B);
    REQUIRE(as_big(a - b) == A - B);
    REQUIRE(as_big(a * b) == A * B);
    Big q = A / B, r = A % B;
    if (r != 0 && ((r < 0) != (B < 0))) {
      q -= 1;
      r += B;
    }
    REQUIRE(as_big(floor_div(a, b)) == q);
    REQUIRE(as_big(floor_mod(a, b)) == r);
    REQUIRE(as_big(gcd(a, b)) == boost::multiprecision::gcd(A, B));
    Integer c = a;
    c.sub_mul(b, Integer(3));
    REQUIRE(as_big(c) == A - 3 * B);
    REQUIRE(((a <=> b) < 0) == (A < B));
  }
}

TEST_CASE("QZ values are reduced into [0, 1)", "[qz]") {
  CHECK(QZ(3, 6) == QZ(1, 2));
  CHECK(QZ(-1, 4) == QZ(3, 4));
  CHECK(QZ(5, 4) == QZ(1, 4));
  CHECK(QZ(4, 2).is_zero());
  CHECK(QZ(4, 2).den() == 1);
  CHECK((QZ(1, 2) + QZ(1, 3)) == QZ(5, 6));
  CHECK((QZ(1, 2) + QZ(1, 2)).is_zero());
  CHECK((QZ(1, 3) * 4) == QZ(1, 3));
  CHECK(-QZ(1, 3) == QZ(2, 3));
  CHECK(QZ::parse("2/4") == QZ(1, 2));
  CHECK(QZ::parse("-1/3") == QZ(2, 3));
  CHECK(QZ::parse("7").is_zero());
  CHECK(QZ(1, 4).str() == "1/4");
  CHECK(QZ().str() == "0/1");
  CHECK(QZ(1, 2).divided_lift(Integer(2)) == QZ(1, 4));
  CHECK_THROWS_AS(QZ::parse("1/0"), Error);
  CHECK_THROWS_AS(QZ::parse("a/2"), Error);
}

TEST_CASE("QZ group law on random fractions", "[qz][property]") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 1000; ++trial) {
    QZ a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE((a + b) == (b + a));
    REQUIRE((a - a).is_zero());
    REQUIRE(std::gcd(a.num(), a.den()) == (a.num() == 0 ? a.den() : 1));
    REQUIRE((a.num() != 0 || a.den() == 1));
    REQUIRE(a.scaled(Integer(a.den())).is_zero());
  }
}
