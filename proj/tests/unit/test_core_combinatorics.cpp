#include <doctest.h>

#include "binpack/core_combinatorics.hpp"

using namespace binpack;

TEST_CASE("binomial small values") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 4) == 35);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == Count("118264581564861424"));
}

TEST_CASE("binomial vanishes outside 0 <= k <= n") {
  CHECK(binomial(-1, 1) == 0);
  CHECK(binomial(-1, -1) == 0);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
}

TEST_CASE("binomial keeps growing past 64 bits") {
  // C(200, 100) has 59 decimal digits
  CHECK(to_string(binomial(200, 100)).size() == 59);
  CHECK(binomial(200, 100) == binomial(199, 99) + binomial(199, 100));
}

TEST_CASE("powers") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(70) == BigInt(1) << 70);
  CHECK(pow2_rational(-3) == Rational(1, 8));
  CHECK(ipow(0, 0) == 1);
  CHECK(ipow(3, 4) == 81);
  CHECK_THROWS_AS(pow2(-1), DomainError);
}

TEST_CASE("require_integral") {
  CHECK(require_integral(Rational(12, 4), "x") == 3);
  CHECK_THROWS_AS(require_integral(Rational(5, 2), "x"), IntegralityError);
}

TEST_CASE("weighted sums") {
  auto m1 = weighted_sum_identity_m1(3);
  CHECK(m1.left == 12);
  CHECK(m1.right == 12);
  CHECK(weighted_sum_identity_m1(1).left == 1);
  CHECK(weighted_sum_identity_m1(10).left == 5120);

  auto m2 = weighted_sum_identity_m2(3);
  CHECK(m2.left == 24);
  CHECK(m2.right == 24);
  CHECK(weighted_sum_identity_m2(1).right == 1);
  CHECK(weighted_sum_identity_m2(8).left == 4608);

  for (int n = 1; n <= 200; ++n) {
    CHECK(weighted_sum_identity_m1(n).holds());
    CHECK(weighted_sum_identity_m2(n).holds());
  }
  CHECK_THROWS_AS(weighted_sum_identity_m1(0), DomainError);
}

TEST_CASE("parity sums") {
  CHECK(parity_sums(3).left == 4);
  CHECK(parity_sums(3).right == 4);
  CHECK(parity_sums(1).left == 1);
  CHECK(parity_sums(6).right == 32);
  for (int m = 1; m <= 200; ++m) {
    REQUIRE(parity_sums(m).holds());
    CHECK(parity_sums(m).left == pow2(m - 1));
  }
  CHECK_THROWS_AS(parity_sums(0), DomainError);
}
