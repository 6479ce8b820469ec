#include "binpack/closed_forms.hpp"

#include <string>

#include "binpack/generalized.hpp"

namespace binpack {

namespace {

void require(bool condition, const char* op, const std::string& message) {
  if (!condition) {
    throw DomainError(std::string(op) + ": " + message);
  }
}

std::string args(std::initializer_list<std::pair<const char*, std::int64_t>> named) {
  std::string out = "(";
  bool first = true;
  for (const auto& [name, value] : named) {
    if (!first) {
      out += ", ";
    }
    out += name;
    out += '=';
    out += std::to_string(value);
    first = false;
  }
  return out + ")";
}

void require_double_plus(const char* op, std::int64_t k, std::int64_t j) {
  require(1 <= j && j < k, op, "requires 1 <= j < k, got " + args({{"k", k}, {"j", j}}));
}

}  // namespace

BRegime classify(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 1) {
    throw DomainError("classify requires n, k >= 1");
  }
  const std::int64_t m = n / k;
  const std::int64_t j = n % k;
  if (n < k) {
    return {RegimeTag::Trivial, 0, 0};
  }
  if (n == k) {
    return {RegimeTag::Single, 0, 1};
  }
  if (n < 2 * k) {
    return {RegimeTag::Dominant, j, 1};
  }
  if (n == 2 * k) {
    return {RegimeTag::Double, 0, 2};
  }
  if (n < 3 * k) {
    return {RegimeTag::DoublePlus, j, 2};
  }
  return {RegimeTag::General, j, m};
}

std::string_view regime_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::Trivial:
      return "trivial";
    case RegimeTag::Single:
      return "single";
    case RegimeTag::Dominant:
      return "dominant";
    case RegimeTag::Double:
      return "double";
    case RegimeTag::DoublePlus:
      return "double_plus";
    case RegimeTag::General:
      return "general";
  }
  return "unknown";
}

Count m_dominant(std::int64_t n, std::int64_t l, std::int64_t k) {
  require(n < 2 * k && k < n, "m_dominant", "requires n/2 < k < n, got " + args({{"n", n}, {"k", k}}));
  require(2 <= l && l <= n - k + 1, "m_dominant",
          "requires 2 <= l <= n-k+1, got " + args({{"n", n}, {"l", l}, {"k", k}}));
  return l * binomial(n - k - 1, l - 2);
}

Count b_dominant(std::int64_t n, std::int64_t k) {
  require(n < 2 * k && k < n, "b_dominant", "requires n/2 < k < n, got " + args({{"n", n}, {"k", k}}));
  const std::int64_t t = n - k;
  return require_integral(Rational(t + 3) * pow2_rational(t - 2), "(n-k+3)2^(n-k-2)");
}

Count b_dominant_termwise(std::int64_t n, std::int64_t k) {
  require(n < 2 * k && k < n, "b_dominant_termwise",
          "requires n/2 < k < n, got " + args({{"n", n}, {"k", k}}));
  Count total = 0;
  for (std::int64_t l = 2; l <= n - k + 1; ++l) {
    total += l * binomial(n - k - 1, l - 2);
  }
  return total;
}

Count m_double(std::int64_t k, std::int64_t l) {
  require(k >= 1, "m_double", "requires k >= 1");
  require(2 <= l && l <= k + 1, "m_double", "requires 2 <= l <= k+1, got " + args({{"k", k}, {"l", l}}));
  if (l == 2) {
    return 1;
  }
  return l * binomial(k - 1, l - 2);
}

Count b_double(std::int64_t k) {
  require(k >= 1, "b_double", "requires k >= 1, got " + args({{"k", k}}));
  return require_integral(Rational(k + 3) * pow2_rational(k - 2) - 1, "(k+3)2^(k-2) - 1");
}

Count t_two_marked(std::int64_t k, std::int64_t j, std::int64_t i) {
  require(1 <= i && i <= j && j < k, "t_two_marked",
          "requires 1 <= i <= j < k, got " + args({{"k", k}, {"j", j}, {"i", i}}));
  if (i == j) {
    return 2;
  }
  Count total = 0;
  for (std::int64_t l = 1; l <= j - i; ++l) {
    total += (l * l + 3 * l + 2) * binomial(j - i - 1, l - 1);
  }
  return total;
}

Count f_at_least(std::int64_t k, std::int64_t j, std::int64_t t) {
  require_double_plus("f_at_least", k, j);
  require(t == 1 || t == 2, "f_at_least", "requires t in {1, 2}, got " + args({{"t", t}}));
  Count two_full = 0;
  for (std::int64_t l = 1; l <= j; ++l) {
    two_full += (l * l + 3 * l + 2) / 2 * binomial(j - 1, l - 1);
  }
  if (t == 2) {
    return two_full;
  }
  Count one_full = 0;
  for (std::int64_t l = 1; l <= k + j; ++l) {
    one_full += (l + 1) * binomial(k + j - 1, l - 1);
  }
  return one_full - two_full;
}

Count u_two_marked_fixed(std::int64_t k, std::int64_t j, std::int64_t i, std::int64_t l) {
  require(1 <= i && i < j && j < k, "u_two_marked_fixed",
          "requires 1 <= i < j < k, got " + args({{"k", k}, {"j", j}, {"i", i}}));
  require(3 <= l && l <= j - i + 2, "u_two_marked_fixed",
          "requires 3 <= l <= j-i+2, got " + args({{"j", j}, {"i", i}, {"l", l}}));
  return (l * l - l) * binomial(j - i - 1, l - 3);
}

Count g_two_full_fixed(std::int64_t k, std::int64_t j, std::int64_t l) {
  require_double_plus("g_two_full_fixed", k, j);
  require(3 <= l && l <= j + 2, "g_two_full_fixed",
          "requires 3 <= l <= j+2, got " + args({{"j", j}, {"l", l}}));
  return (l * l - l) / 2 * binomial(j - 1, l - 3);
}

Count m_double_plus(std::int64_t k, std::int64_t j, std::int64_t l) {
  require_double_plus("m_double_plus", k, j);
  require(2 <= l && l <= k + j + 1, "m_double_plus",
          "requires 2 <= l <= k+j+1, got " + args({{"k", k}, {"j", j}, {"l", l}}));
  if (l == 2) {
    return 0;
  }
  const Count at_least_one = l * binomial(k + j - 1, l - 2);
  if (l >= j + 3) {
    return at_least_one;
  }
  const Count two_full = (l * l - l) / 2 * binomial(j - 1, l - 3);
  if (l == j + 2) {
    return at_least_one - two_full;
  }
  // 3 <= l <= j + 1: l = j + 2 - s with 1 <= s < j; subtract every
  // configuration pairing a part k with a part k + i, i <= s.
  const std::int64_t s = j + 2 - l;
  Count marked = 0;
  for (std::int64_t i = 1; i <= s; ++i) {
    marked += (l * l - l) * binomial(j - i - 1, l - 3);
  }
  return at_least_one - two_full - marked;
}

SumEvalTriple sum_eval_triple(std::int64_t k, std::int64_t j) {
  require_double_plus("sum_eval_triple", k, j);
  SumEvalTriple out;
  out.first = require_integral(Rational(k + j + 3) * pow2_rational(k + j - 2), "(k+j+3)2^(k+j-2)");
  out.second = require_integral(pow2_rational(j - 4) * (j * j + 9 * j + 14), "2^(j-4)(j^2+9j+14)");
  out.third = require_integral(pow2_rational(j - 3) * (j * j + 5 * j + 2) - 2, "2^(j-3)(j^2+5j+2) - 2");
  return out;
}

SumEvalTriple sum_eval_termwise(std::int64_t k, std::int64_t j) {
  require_double_plus("sum_eval_termwise", k, j);
  SumEvalTriple out;
  for (std::int64_t l = 2; l <= k + j + 1; ++l) {
    out.first += l * binomial(k + j - 1, l - 2);
  }
  for (std::int64_t l = 3; l <= j + 2; ++l) {
    out.second += (l * l - l) / 2 * binomial(j - 1, l - 3);
  }
  for (std::int64_t i = 1; i <= j - 1; ++i) {
    for (std::int64_t l = 3; l <= j - i + 2; ++l) {
      out.third += (l * l - l) * binomial(j - i - 1, l - 3);
    }
  }
  return out;
}

Count b_double_plus(std::int64_t k, std::int64_t j) {
  require_double_plus("b_double_plus", k, j);
  const Rational value = Rational(k + j + 3) * pow2_rational(k + j - 2) -
                         Rational(3 * j * j + 19 * j + 18) * pow2_rational(j - 4);
  return require_integral(value, "(k+j+3)2^(k+j-2) - (3j^2+19j+18)2^(j-4)");
}

Count b_double_plus_termwise(std::int64_t k, std::int64_t j) {
  const SumEvalTriple sums = sum_eval_termwise(k, j);
  return sums.first - sums.second - sums.third - 2;
}

bool has_closed_form(std::int64_t n, std::int64_t k) { return classify(n, k).tag != RegimeTag::General; }

Count b_any(std::int64_t n, std::int64_t k) {
  const BRegime regime = classify(n, k);
  switch (regime.tag) {
    case RegimeTag::Trivial:
      return 0;
    case RegimeTag::Single:
      return 1;
    case RegimeTag::Dominant:
      return b_dominant(n, k);
    case RegimeTag::Double:
      return b_double(k);
    case RegimeTag::DoublePlus:
      return b_double_plus(k, regime.j);
    case RegimeTag::General:
      break;
  }
  Count total = 0;
  for (std::int64_t l = 1; l <= n; ++l) {
    total += m_formula_two(n, l, k);
  }
  return total;
}

}  // namespace binpack
