#include "binpack/core_combinatorics.hpp"

#include <algorithm>

namespace binpack {

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  const std::int64_t r = std::min(k, n - k);
  Count result = 1;
  // result == C(n - r + i, i) after step i, so each division is exact.
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

Count pow2(std::int64_t e) {
  if (e < 0) {
    throw DomainError("pow2: negative exponent " + std::to_string(e));
  }
  Count result = 1;
  result <<= static_cast<unsigned>(e);
  return result;
}

Rational pow2_rational(std::int64_t e) {
  if (e >= 0) {
    return Rational(pow2(e));
  }
  return Rational(BigInt(1), pow2(-e));
}

BigInt require_integral(const Rational& value, const std::string& what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw IntegralityError(what + " is not an integer: " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

BigInt ipow(std::int64_t base, std::int64_t e) {
  if (e < 0) {
    throw DomainError("ipow: negative exponent " + std::to_string(e));
  }
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

IdentitySides weighted_sum_identity_m1(std::int64_t n) {
  if (n < 1) {
    throw DomainError("weighted_sum_identity_m1 requires n >= 1, got " + std::to_string(n));
  }
  IdentitySides sides;
  for (std::int64_t k = 0; k <= n; ++k) {
    sides.left += k * binomial(n, k);
  }
  sides.right = n * pow2(n - 1);
  return sides;
}

IdentitySides weighted_sum_identity_m2(std::int64_t n) {
  if (n < 1) {
    throw DomainError("weighted_sum_identity_m2 requires n >= 1, got " + std::to_string(n));
  }
  IdentitySides sides;
  for (std::int64_t k = 0; k <= n; ++k) {
    sides.left += k * k * binomial(n, k);
  }
  // n(n+1) 2^(n-2); at n = 1 the power is 1/2 and n(n+1) = 2.
  sides.right = require_integral(Rational(BigInt(n) * (n + 1)) * pow2_rational(n - 2),
                                 "n(n+1)2^(n-2)");
  return sides;
}

IdentitySides parity_sums(std::int64_t m) {
  if (m < 1) {
    throw DomainError("parity_sums requires m >= 1, got " + std::to_string(m));
  }
  IdentitySides sides;
  for (std::int64_t t = 0; t <= m; ++t) {
    (t % 2 == 0 ? sides.left : sides.right) += binomial(m, t);
  }
  return sides;
}

std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace binpack
