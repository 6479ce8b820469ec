#include "binpack/generalized.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace binpack {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw DomainError(message);
  }
}

std::string triple(std::int64_t n, std::int64_t l, std::int64_t k) {
  return "(n=" + std::to_string(n) + ", l=" + std::to_string(l) + ", k=" + std::to_string(k) + ")";
}

}  // namespace

Count r_pie(std::int64_t n, std::int64_t l, std::int64_t cap) {
  require(l >= 0, "r_pie requires l >= 0");
  if (n < 0 || cap < 0) {
    return 0;
  }
  if (l == 0) {
    return n == 0 ? 1 : 0;
  }
  BigInt total = 0;
  // Terms with t (cap + 1) > n vanish under the extended binomial.
  const std::int64_t last = std::min(l, n / (cap + 1));
  for (std::int64_t t = 0; t <= last; ++t) {
    const BigInt term = binomial(l, t) * binomial(n - t * (cap + 1) + l - 1, l - 1);
    if (t % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Count r_recurrence(std::int64_t n, std::int64_t l, std::int64_t cap) {
  require(l >= 0, "r_recurrence requires l >= 0");
  if (n < 0 || cap < 0) {
    return 0;
  }
  if (l == 0) {
    return n == 0 ? 1 : 0;
  }
  const auto size = static_cast<std::size_t>(n) + 1;
  // row[x] = R(x, parts, cap), starting from a single part.
  std::vector<Count> row(size);
  for (std::size_t x = 0; x < size; ++x) {
    row[x] = static_cast<std::int64_t>(x) <= cap ? 1 : 0;
  }
  for (std::int64_t parts = 1; parts < l; ++parts) {
    // R(x, parts+1, cap) = sum_{i=0}^{cap} R(x-i, parts, cap); sweep x downward
    // so that the window still reads the previous row.
    Count window = 0;
    const std::int64_t top = n;
    for (std::int64_t i = std::max<std::int64_t>(0, top - cap); i <= top; ++i) {
      window += row[static_cast<std::size_t>(i)];
    }
    for (std::int64_t x = top; x >= 0; --x) {
      const Count value = window;
      window -= row[static_cast<std::size_t>(x)];
      if (x - cap - 1 >= 0) {
        window += row[static_cast<std::size_t>(x - cap - 1)];
      }
      row[static_cast<std::size_t>(x)] = value;
    }
  }
  return row[static_cast<std::size_t>(n)];
}

Count r_count(std::int64_t n, std::int64_t l, std::int64_t cap, REvaluation how) {
  return how == REvaluation::Recurrence ? r_recurrence(n, l, cap) : r_pie(n, l, cap);
}

bool m_feasible(std::int64_t n, std::int64_t l, std::int64_t k) { return l + k - 1 <= n && n <= l * k; }

Count m_formula_one(std::int64_t n, std::int64_t l, std::int64_t k, REvaluation how) {
  require(n >= 1 && l >= 1 && k >= 1, "m_formula_one requires n, l, k >= 1, got " + triple(n, l, k));
  if (!m_feasible(n, l, k)) {
    return 0;
  }
  BigInt total = 0;
  for (std::int64_t t = 1; t <= l; ++t) {
    const BigInt term = binomial(l, t) * r_count(n - t * (k - 1) - l, l - t, k - 1, how);
    if (t % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Count m_formula_two(std::int64_t n, std::int64_t l, std::int64_t k, REvaluation how) {
  require(n >= 1 && l >= 1 && k >= 1, "m_formula_two requires n, l, k >= 1, got " + triple(n, l, k));
  if (!m_feasible(n, l, k)) {
    return 0;
  }
  return r_count(n - l, l, k - 1, how) - r_count(n - l, l, k - 2, how);
}

Count k_total(std::int64_t n, std::int64_t l) {
  require(n >= 1 && l >= 1, "k_total requires n, l >= 1");
  return binomial(n - 1, l - 1);
}

Count n_total(std::int64_t l, std::int64_t k) {
  require(l >= 1 && k >= 1, "n_total requires l, k >= 1");
  return ipow(k, l) - ipow(k - 1, l);
}

std::optional<Identity> parse_identity(std::string_view name) {
  if (name == "lem1") return Identity::Lem1;
  if (name == "lem2") return Identity::Lem2;
  if (name == "lem4") return Identity::Lem4;
  if (name == "lem5") return Identity::Lem5;
  return std::nullopt;
}

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::Lem1:
      return "lem1";
    case Identity::Lem2:
      return "lem2";
    case Identity::Lem4:
      return "lem4";
    case Identity::Lem5:
      return "lem5";
  }
  return "unknown";
}

IdentitySides identity_check(Identity id, const IdentityParams& p) {
  require(p.n >= 0 && p.l >= 1 && p.k >= 1, "identity_check requires n >= 0, l >= 1, k >= 1");
  IdentitySides sides;
  switch (id) {
    case Identity::Lem1:
      require(p.n <= p.l * p.k, "lem1 requires 0 <= n <= l k");
      sides.left = r_pie(p.n, p.l, p.k);
      sides.right = r_pie(p.l * p.k - p.n, p.l, p.k);
      break;
    case Identity::Lem2:
      require(p.m >= 1, "lem2 requires m >= 1");
      sides.left = r_pie(p.n, p.l, p.m + p.k);
      for (std::int64_t i = 0; i <= p.n; ++i) {
        sides.right += r_pie(i, p.l, p.m) * r_pie(p.n - i, p.l, p.k);
      }
      break;
    case Identity::Lem4:
      sides.left = r_pie(p.n, p.l + 1, p.k);
      for (std::int64_t i = 0; i <= p.k; ++i) {
        sides.right += r_pie(p.n - i, p.l, p.k);
      }
      break;
    case Identity::Lem5:
      sides.left = r_pie(p.n + 1, p.l + 1, p.k) - r_pie(p.n, p.l + 1, p.k);
      sides.right = r_pie(p.n + 1, p.l, p.k) - r_pie(p.n - p.k, p.l, p.k);
      break;
  }
  return sides;
}

Count DistributionTable::total() const {
  Count sum = 0;
  for (const auto& row : rows) {
    sum += row.second;
  }
  return sum;
}

DistributionTable distribution(std::int64_t n, std::int64_t k) {
  require(1 <= k && k <= n, "distribution requires 1 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  DistributionTable table;
  table.n = n;
  table.k = k;
  Count weighted = 0;
  Count total = 0;
  for (std::int64_t l = 1; l <= n; ++l) {
    Count count = m_formula_two(n, l, k);
    if (count == 0) {
      continue;
    }
    weighted += l * count;
    total += count;
    table.rows.emplace_back(l, std::move(count));
  }
  if (total != 0) {
    table.mean_bins = Rational(weighted, total);
  }
  return table;
}

std::string to_decimal_string(const Rational& value, int significant) {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  Decimal decimal(boost::multiprecision::numerator(value));
  decimal /= Decimal(boost::multiprecision::denominator(value));
  return decimal.str(significant);
}

}  // namespace binpack
