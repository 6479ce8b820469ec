#include "binpack/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "binpack/generalized.hpp"

namespace binpack {

AlphaBeta alpha_beta(std::int64_t n, std::int64_t l, std::int64_t k) {
  if (n < 1 || l < 1 || k < 1) {
    throw DomainError("alpha_beta requires n, l, k >= 1");
  }
  AlphaBeta out{-1, -1};
  for (std::int64_t t = 0; t <= l; ++t) {
    if (n - t * k - 1 >= l - 1) {
      out.alpha = t;
    }
    if (n - t * (k - 1) - 1 >= l - 1) {
      out.beta = t;
    }
  }
  return out;
}

StirlingInterval stirling_bounds(std::int64_t m) {
  if (m < 1) {
    throw DomainError("stirling_bounds requires m >= 1");
  }
  const double x = static_cast<double>(m);
  const double base = 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(x) - x;
  return {std::exp(base + 1.0 / (12.0 * x + 1.0)), std::exp(base + 1.0 / (12.0 * x))};
}

LogReal LogReal::from_log(int sign, double log_abs) {
  LogReal out;
  out.sign_ = sign > 0 ? 1 : (sign < 0 ? -1 : 0);
  out.log_abs_ = out.sign_ == 0 ? 0.0 : log_abs;
  return out;
}

double log_of(const BigInt& value) {
  if (value <= 0) {
    throw DomainError("log_of requires a positive value");
  }
  // Binary float with a wide exponent: no overflow at any size we produce.
  const boost::multiprecision::cpp_bin_float_50 wide(value);
  return static_cast<double>(boost::multiprecision::log(wide));
}

LogReal LogReal::from_count(const BigInt& value) {
  if (value == 0) {
    return zero();
  }
  return from_log(value.sign(), log_of(boost::multiprecision::abs(value)));
}

bool LogReal::finite() const { return sign_ == 0 || std::isfinite(log_abs_); }

double LogReal::to_double() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_abs_); }

std::string LogReal::to_scientific(int significant) const {
  if (sign_ == 0) {
    return "0";
  }
  if (!std::isfinite(log_abs_)) {
    return sign_ > 0 ? "inf" : "-inf";
  }
  const double decimal_log = log_abs_ / std::numbers::ln10;
  auto exponent = static_cast<long long>(std::floor(decimal_log));
  double mantissa = std::pow(10.0, decimal_log - static_cast<double>(exponent));
  const int decimals = std::max(0, significant - 1);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, mantissa);
  if (buffer[0] == '1' && buffer[1] == '0') {  // rounded up to 10.0...
    ++exponent;
    mantissa /= 10.0;
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, mantissa);
  }
  char out[96];
  std::snprintf(out, sizeof out, "%s%se%+lld", sign_ < 0 ? "-" : "", buffer, exponent);
  return out;
}

int compare(const LogReal& a, const LogReal& b) {
  if (a.sign_ != b.sign_) {
    return a.sign_ < b.sign_ ? -1 : 1;
  }
  if (a.sign_ == 0 || a.log_abs_ == b.log_abs_) {
    return 0;
  }
  const int by_magnitude = a.log_abs_ < b.log_abs_ ? -1 : 1;
  return a.sign_ > 0 ? by_magnitude : -by_magnitude;
}

LogReal log_sum(std::span<const LogReal> terms) {
  double largest = -std::numeric_limits<double>::infinity();
  for (const auto& term : terms) {
    if (term.sign() != 0) {
      largest = std::max(largest, term.log_abs());
    }
  }
  if (!std::isfinite(largest)) {
    return std::isinf(largest) && largest > 0 ? LogReal::from_log(1, largest) : LogReal::zero();
  }
  double scaled = 0.0;
  for (const auto& term : terms) {
    if (term.sign() != 0) {
      scaled += term.sign() * std::exp(term.log_abs() - largest);
    }
  }
  if (scaled == 0.0) {
    return LogReal::zero();
  }
  return LogReal::from_log(scaled > 0 ? 1 : -1, largest + std::log(std::abs(scaled)));
}

bool BoundsInterval::contains(const BigInt& value) const {
  const LogReal exact = LogReal::from_count(value);
  return lower <= exact && exact <= upper;
}

namespace {

// 1/(12 x), read as 0 where x == 0.
double reciprocal_twelfth(std::int64_t x, bool& applicable) {
  if (x == 0) {
    applicable = false;
    return 0.0;
  }
  return 1.0 / (12.0 * static_cast<double>(x));
}

}  // namespace

BoundsInterval m_envelope(std::int64_t n, std::int64_t l, std::int64_t k) {
  if (n < 2 || l < 1 || k < 1 || k > n || n > l * k) {
    throw DomainError("m_envelope requires k <= n <= l k and n >= 2, got n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + ", k=" + std::to_string(k));
  }
  bool applicable = true;
  const AlphaBeta ab = alpha_beta(n, l, k);
  if (ab.alpha < 0 || ab.beta < 0) {
    applicable = false;
  }

  const auto boundary = [&](std::int64_t index, std::int64_t step) -> Count {
    if (index < 0) {
      return 0;
    }
    return 2 * binomial(l, index) * binomial(n - index * step - 1, l - 1);
  };
  const LogReal boundary_alpha = LogReal::from_count(boundary(ab.alpha, k));
  const LogReal boundary_beta = LogReal::from_count(boundary(ab.beta, k - 1));

  const double nd = static_cast<double>(n);
  const double ld = static_cast<double>(l);
  const double kd = static_cast<double>(k);
  const double log_fact = std::lgamma(ld);  // log (l-1)!
  const double shared_tail = -1.0 / (12.0 * (nd - ld) + 1.0);

  // 2^(l-1)/(l-1)! (n-1)^(n-1/2) e^(1-l+lk) e^(1/(12 guard) - 1/(12(n-l)+1))
  //   / base^power
  const auto large_term = [&](std::int64_t base, double power, std::int64_t guard) -> LogReal {
    const double fraction = reciprocal_twelfth(guard, applicable);
    if (base <= 0) {
      applicable = false;
      return LogReal::zero();
    }
    const double log_value = (ld - 1.0) * std::numbers::ln2 - log_fact + (nd - 0.5) * std::log(nd - 1.0) +
                             (1.0 - ld + ld * kd) + fraction + shared_tail -
                             power * std::log(static_cast<double>(base));
    return LogReal::from_log(1, log_value);
  };

  const LogReal term_alpha =
      large_term(n - (ab.alpha - 1) * k - l, nd - ld * kd - ld + 0.5, n - l * k - 1);
  const LogReal term_beta = large_term(n - (ab.beta - 1) * (k - 1) - l,
                                       nd - ld * (kd - 1.0) - ld + 0.5, n - l * (k - 1) - 1);

  // 2^l/(l-1)! (n-l)^(-l-1) e^(1-l) e^(1/(12n-11) - 1/12)
  LogReal small_term = LogReal::zero();
  if (n - l > 0) {
    const double log_value = ld * std::numbers::ln2 - log_fact - (ld + 1.0) * std::log(nd - ld) +
                             (1.0 - ld) + 1.0 / (12.0 * nd - 11.0) - 1.0 / 12.0;
    small_term = LogReal::from_log(1, log_value);
  } else {
    applicable = false;
  }

  const LogReal upper_terms[] = {boundary_alpha, boundary_beta, term_alpha, -small_term, term_beta};
  const LogReal lower_terms[] = {-boundary_alpha, -boundary_beta, small_term, -term_alpha, -term_beta};

  BoundsInterval out;
  out.upper = log_sum(upper_terms);
  out.lower = log_sum(lower_terms);
  out.exact_applicable = applicable;
  return out;
}

ContainmentRow containment_point(std::int64_t n, std::int64_t l, std::int64_t k) {
  ContainmentRow row{n, l, k, m_envelope(n, l, k), m_formula_two(n, l, k), false};
  row.contained = row.interval.contains(row.exact);
  return row;
}

void write_containment_csv(std::ostream& out, std::span<const ContainmentRow> rows) {
  out << "n,l,k,lower,exact,upper,contained,applicable\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.l << ',' << row.k << ',' << row.interval.lower.to_scientific() << ','
        << row.exact << ',' << row.interval.upper.to_scientific() << ',' << (row.contained ? "true" : "false")
        << ',' << (row.interval.exact_applicable ? "true" : "false") << '\n';
  }
}

}  // namespace binpack
