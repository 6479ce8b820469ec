#pragma once

// Analytic envelopes for M_{n,l,k} built from two-sided Stirling estimates.
// The envelope terms grow like e^{lk}, far past double range, so every
// real-valued quantity here is carried as a sign and a natural logarithm.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "binpack/core_combinatorics.hpp"

namespace binpack {

/// Largest inclusion-exclusion indices whose binomial terms are nonvanishing:
///   alpha = max{t in 0..l : n - t k - 1 >= l - 1}
///   beta  = max{t in 0..l : n - t (k-1) - 1 >= l - 1}
/// -1 encodes an empty set.
struct AlphaBeta {
  std::int64_t alpha;
  std::int64_t beta;
  bool operator==(const AlphaBeta&) const = default;
};

AlphaBeta alpha_beta(std::int64_t n, std::int64_t l, std::int64_t k);

struct StirlingInterval {
  double lower;
  double upper;
};

/// sqrt(2 pi) m^(m+1/2) e^(-m) e^(1/(12m+1)) <= m! <= ... e^(1/(12m)).
/// Requires m >= 1.
StirlingInterval stirling_bounds(std::int64_t m);

/// A real number stored as sign * exp(log_abs).
class LogReal {
 public:
  LogReal() = default;

  static LogReal zero() { return {}; }
  static LogReal from_log(int sign, double log_abs);
  static LogReal from_count(const BigInt& value);

  int sign() const { return sign_; }
  /// Natural log of the magnitude; meaningless when sign() == 0.
  double log_abs() const { return log_abs_; }
  bool finite() const;
  /// Plain double; overflows to +-inf for large magnitudes.
  double to_double() const;
  /// Scientific notation that never overflows, e.g. "-1.234567890e+1234".
  std::string to_scientific(int significant = 10) const;

  LogReal operator-() const { return from_log(-sign_, log_abs_); }

  friend int compare(const LogReal& a, const LogReal& b);
  friend bool operator<=(const LogReal& a, const LogReal& b) { return compare(a, b) <= 0; }

 private:
  int sign_ = 0;
  double log_abs_ = 0.0;
};

/// Sum of signed log-magnitudes, accumulated relative to the largest term.
LogReal log_sum(std::span<const LogReal> terms);

/// Natural log of a positive integer of any size.
double log_of(const BigInt& value);

struct BoundsInterval {
  LogReal lower;
  LogReal upper;
  /// True only when every sub-expression was evaluated inside its own domain:
  /// alpha, beta >= 0, positive bases, and nonzero 1/(12 x) denominators.
  bool exact_applicable = false;

  bool finite() const { return lower.finite() && upper.finite(); }
  bool contains(const BigInt& value) const;
};

/// Upper and lower envelopes of M_{n,l,k}, transcribed term for term.
/// Requires k <= n <= l k and n >= 2 (throws DomainError otherwise).
///
/// Where a sub-expression leaves its domain, the term is dropped (non-positive
/// power base) or its 1/(12 x) exponent is read as 0 (x == 0), and
/// exact_applicable is cleared.
BoundsInterval m_envelope(std::int64_t n, std::int64_t l, std::int64_t k);

/// One line of the containment report.
struct ContainmentRow {
  std::int64_t n;
  std::int64_t l;
  std::int64_t k;
  BoundsInterval interval;
  Count exact;
  bool contained;
};

/// Evaluates the envelope and the exact M (formula II) at one point.
ContainmentRow containment_point(std::int64_t n, std::int64_t l, std::int64_t k);

/// CSV with header n,l,k,lower,exact,upper,contained,applicable.
void write_containment_csv(std::ostream& out, std::span<const ContainmentRow> rows);

}  // namespace binpack
