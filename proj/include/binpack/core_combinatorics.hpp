#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace binpack {

/// Arbitrary-precision integer used for every exact quantity.
using BigInt = boost::multiprecision::cpp_int;

/// A counted quantity. Always nonnegative; shares the representation of BigInt
/// so that alternating sums can be formed without conversions.
using Count = BigInt;

using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation is called outside its stated parameter domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an expression that must be integral evaluates to a fraction.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Both sides of an identity, evaluated independently. Sides may be negative
/// for difference identities.
struct IdentitySides {
  BigInt left;
  BigInt right;

  bool holds() const { return left == right; }
};

/// Extended binomial coefficient: n!/(k!(n-k)!) when 0 <= k <= n, and 0 for
/// every other pair of integers (including negative arguments).
///
/// Evaluated as a running product with exact division at each step, so the
/// largest intermediate never exceeds the final value times k.
Count binomial(std::int64_t n, std::int64_t k);

/// 2^e for e >= 0.
Count pow2(std::int64_t e);

/// 2^e as an exact rational; negative exponents are allowed.
Rational pow2_rational(std::int64_t e);

/// Converts a rational to an integer, throwing IntegralityError if the
/// denominator is not 1. `what` names the expression in the message.
BigInt require_integral(const Rational& value, const std::string& what);

/// base^e for e >= 0 (0^0 = 1).
BigInt ipow(std::int64_t base, std::int64_t e);

/// (sum_k k C(n,k) term by term, n 2^(n-1)). Requires n >= 1.
IdentitySides weighted_sum_identity_m1(std::int64_t n);

/// (sum_k k^2 C(n,k) term by term, n(n+1) 2^(n-2)). Requires n >= 1.
IdentitySides weighted_sum_identity_m2(std::int64_t n);

/// (sum of C(m,t) over even t, sum over odd t). Both equal 2^(m-1) for m >= 1.
IdentitySides parity_sums(std::int64_t m);

std::string to_string(const BigInt& value);

}  // namespace binpack
