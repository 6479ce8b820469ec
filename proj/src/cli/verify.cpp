#include "binpack/cli/verify.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>

#include "binpack/cli/parallel.hpp"
#include "binpack/closed_forms.hpp"
#include "binpack/generalized.hpp"
#include "binpack/oracle.hpp"

namespace binpack::cli {

namespace {

using Failure = std::optional<std::string>;

struct Point {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
};

template <class Check>
PropertyResult run_grid(std::string name, const std::vector<Point>& cases, unsigned jobs, Check check) {
  std::vector<Failure> failures(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) { failures[i] = check(cases[i]); });
  PropertyResult result;
  result.name = std::move(name);
  result.cases = cases.size();
  for (const auto& failure : failures) {
    if (failure) {
      result.passed = false;
      result.detail = *failure;
      break;
    }
  }
  return result;
}

template <class... Values>
std::string describe(const std::string& where, const Values&... values) {
  std::ostringstream out;
  out << where << ':';
  ((out << ' ' << values), ...);
  return out.str();
}

Failure expect_equal(const std::string& where, const BigInt& got, const BigInt& want) {
  if (got == want) {
    return std::nullopt;
  }
  return describe(where, "got", got, "expected", want);
}

Failure expect_sides(const std::string& where, const IdentitySides& sides) {
  if (sides.holds()) {
    return std::nullopt;
  }
  return describe(where, "left", sides.left, "right", sides.right);
}

std::string at(std::initializer_list<std::pair<const char*, int>> named) {
  std::string out;
  for (const auto& [name, value] : named) {
    if (!out.empty()) {
      out += ' ';
    }
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "closed-forms") return Suite::ClosedForms;
  if (name == "identities") return Suite::Identities;
  if (name == "generalized") return Suite::Generalized;
  if (name == "bounds") return Suite::Bounds;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

// ---- core ------------------------------------------------------------------

PropertyResult check_binomial_vs_subsets(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 0; n <= n_max; ++n) {
    cases.push_back({n});
  }
  return run_grid("binomial_vs_subset_enumeration", cases, jobs, [](const Point& p) -> Failure {
    std::vector<std::uint64_t> by_size(static_cast<std::size_t>(p.a) + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.a); ++mask) {
      ++by_size[static_cast<std::size_t>(std::popcount(mask))];
    }
    for (int k = 0; k <= p.a; ++k) {
      if (auto f = expect_equal(at({{"n", p.a}, {"k", k}}), binomial(p.a, k), by_size[static_cast<std::size_t>(k)])) {
        return f;
      }
    }
    return std::nullopt;
  });
}

PropertyResult check_pascal_rule(int n_max) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      cases.push_back({n, k});
    }
  }
  return run_grid("pascal_rule", cases, 1, [](const Point& p) {
    return expect_equal(at({{"n", p.a}, {"k", p.b}}), binomial(p.a, p.b),
                        binomial(p.a - 1, p.b - 1) + binomial(p.a - 1, p.b));
  });
}

PropertyResult check_binomial_zero_outside(int lo, int hi) {
  std::vector<Point> cases;
  for (int n = lo; n <= hi; ++n) {
    for (int k = lo; k <= hi; ++k) {
      if (n < 0 || k < 0 || k > n) {
        cases.push_back({n, k});
      }
    }
  }
  return run_grid("binomial_zero_outside_domain", cases, 1, [](const Point& p) {
    return expect_equal(at({{"n", p.a}, {"k", p.b}}), binomial(p.a, p.b), 0);
  });
}

PropertyResult check_weighted_sum_m1(int n_max) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    cases.push_back({n});
  }
  return run_grid("weighted_sum_identity_m1", cases, 1,
                  [](const Point& p) { return expect_sides(at({{"n", p.a}}), weighted_sum_identity_m1(p.a)); });
}

PropertyResult check_weighted_sum_m2(int n_max) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    cases.push_back({n});
  }
  return run_grid("weighted_sum_identity_m2", cases, 1,
                  [](const Point& p) { return expect_sides(at({{"n", p.a}}), weighted_sum_identity_m2(p.a)); });
}

PropertyResult check_parity_sums(int m_max) {
  std::vector<Point> cases;
  for (int m = 1; m <= m_max; ++m) {
    cases.push_back({m});
  }
  return run_grid("parity_sums", cases, 1, [](const Point& p) -> Failure {
    const IdentitySides sides = parity_sums(p.a);
    if (auto f = expect_sides(at({{"m", p.a}}), sides)) {
      return f;
    }
    return expect_equal(at({{"m", p.a}}) + " vs 2^(m-1)", sides.left, pow2(p.a - 1));
  });
}

// ---- closed forms ------------------------------------------------------------

PropertyResult check_regime_totality(int n_max, int k_max) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= k_max; ++k) {
      cases.push_back({n, k});
    }
  }
  return run_grid("regime_totality", cases, 1, [](const Point& p) -> Failure {
    const int n = p.a;
    const int k = p.b;
    const std::pair<bool, RegimeTag> predicates[] = {
        {n < k, RegimeTag::Trivial},
        {n == k, RegimeTag::Single},
        {2 * k > n && k < n, RegimeTag::Dominant},
        {n == 2 * k, RegimeTag::Double},
        {2 * k < n && n < 3 * k, RegimeTag::DoublePlus},
        {n >= 3 * k, RegimeTag::General},
    };
    int matches = 0;
    RegimeTag expected = RegimeTag::Trivial;
    for (const auto& [holds, tag] : predicates) {
      if (holds) {
        ++matches;
        expected = tag;
      }
    }
    const BRegime regime = classify(n, k);
    if (matches != 1 || regime.tag != expected) {
      return describe(at({{"n", n}, {"k", k}}), "matching regimes", matches, "classified as",
                      regime_name(regime.tag));
    }
    if (regime.tag == RegimeTag::DoublePlus && regime.j != n - 2 * k) {
      return describe(at({{"n", n}, {"k", k}}), "remainder", regime.j);
    }
    return std::nullopt;
  });
}

PropertyResult check_b_closed_vs_oracle(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const RegimeTag tag = classify(n, k).tag;
      if (tag == RegimeTag::Dominant || tag == RegimeTag::Double || tag == RegimeTag::DoublePlus) {
        cases.push_back({n, k});
      }
    }
  }
  return run_grid("b_closed_form_vs_oracle", cases, jobs, [](const Point& p) {
    const BRegime regime = classify(p.a, p.b);
    Count closed;
    switch (regime.tag) {
      case RegimeTag::Dominant:
        closed = b_dominant(p.a, p.b);
        break;
      case RegimeTag::Double:
        closed = b_double(p.b);
        break;
      default:
        closed = b_double_plus(p.b, regime.j);
        break;
    }
    return expect_equal(at({{"n", p.a}, {"k", p.b}}), closed, oracle::oracle_B(p.a, p.b));
  });
}

PropertyResult check_b_any_vs_oracle(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      cases.push_back({n, k});
    }
  }
  return run_grid("b_any_vs_oracle", cases, jobs, [](const Point& p) {
    return expect_equal(at({{"n", p.a}, {"k", p.b}}), b_any(p.a, p.b), oracle::oracle_B(p.a, p.b));
  });
}

PropertyResult check_m_closed_vs_oracle(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 2; n <= n_max; ++n) {
    for (int k = 1; k < n; ++k) {
      const RegimeTag tag = classify(n, k).tag;
      if (tag == RegimeTag::Dominant || tag == RegimeTag::Double || tag == RegimeTag::DoublePlus) {
        for (int l = 1; l <= n; ++l) {
          cases.push_back({n, l, k});
        }
      }
    }
  }
  return run_grid("m_closed_form_vs_oracle", cases, jobs, [](const Point& p) {
    const int n = p.a;
    const int l = p.b;
    const int k = p.c;
    const BRegime regime = classify(n, k);
    Count closed = 0;
    if (regime.tag == RegimeTag::Dominant) {
      if (2 <= l && l <= n - k + 1) closed = m_dominant(n, l, k);
    } else if (regime.tag == RegimeTag::Double) {
      if (2 <= l && l <= k + 1) closed = m_double(k, l);
    } else {
      const int j = n - 2 * k;
      if (2 <= l && l <= k + j + 1) closed = m_double_plus(k, j, l);
    }
    return expect_equal(at({{"n", n}, {"l", l}, {"k", k}}), closed, oracle::oracle_M(n, l, k));
  });
}

PropertyResult check_t_vs_oracle(int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 1; i <= j; ++i) {
        cases.push_back({k, j, i});
      }
    }
  }
  return run_grid("t_two_marked_vs_oracle", cases, jobs, [](const Point& p) {
    return expect_equal(at({{"k", p.a}, {"j", p.b}, {"i", p.c}}), t_two_marked(p.a, p.b, p.c),
                        oracle::oracle_two_marked(2 * p.a + p.b, p.a, p.c));
  });
}

PropertyResult check_t_fixed_point(int k_max) {
  std::vector<Point> cases;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 1; j < k; ++j) {
      cases.push_back({k, j});
    }
  }
  return run_grid("t_fixed_point_two", cases, 1, [](const Point& p) -> Failure {
    const std::string where = at({{"k", p.a}, {"j", p.b}});
    if (auto f = expect_equal(where, t_two_marked(p.a, p.b, p.b), 2)) {
      return f;
    }
    return expect_equal(where + " oracle", oracle::oracle_two_marked(2 * p.a + p.b, p.a, p.b), 2);
  });
}

PropertyResult check_f_vs_oracle(int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int t = 1; t <= 2; ++t) {
        cases.push_back({k, j, t});
      }
    }
  }
  return run_grid("f_at_least_vs_oracle", cases, jobs, [](const Point& p) {
    return expect_equal(at({{"k", p.a}, {"j", p.b}, {"t", p.c}}), f_at_least(p.a, p.b, p.c),
                        oracle::oracle_at_least_t_full(2 * p.a + p.b, p.a, p.c));
  });
}

PropertyResult check_u_vs_oracle(int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int k = 3; k <= k_max; ++k) {
    for (int j = 2; j < k; ++j) {
      for (int i = 1; i < j; ++i) {
        for (int l = 3; l <= j - i + 2; ++l) {
          cases.push_back({k, j, i, l});
        }
      }
    }
  }
  return run_grid("u_two_marked_fixed_vs_oracle", cases, jobs, [](const Point& p) {
    return expect_equal(at({{"k", p.a}, {"j", p.b}, {"i", p.c}, {"l", p.d}}),
                        u_two_marked_fixed(p.a, p.b, p.c, p.d),
                        oracle::oracle_two_marked(2 * p.a + p.b, p.a, p.c, p.d));
  });
}

PropertyResult check_g_vs_oracle(int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int l = 3; l <= j + 2; ++l) {
        cases.push_back({k, j, l});
      }
    }
  }
  return run_grid("g_two_full_fixed_vs_oracle", cases, jobs, [](const Point& p) {
    return expect_equal(at({{"k", p.a}, {"j", p.b}, {"l", p.c}}), g_two_full_fixed(p.a, p.b, p.c),
                        oracle::oracle_at_least_t_full(2 * p.a + p.b, p.a, 2, p.c));
  });
}

PropertyResult check_sum_eval(int k_max) {
  std::vector<Point> cases;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 1; j < k; ++j) {
      cases.push_back({k, j});
    }
  }
  return run_grid("sum_eval_closed_vs_termwise", cases, 1, [](const Point& p) -> Failure {
    const SumEvalTriple closed = sum_eval_triple(p.a, p.b);
    const SumEvalTriple terms = sum_eval_termwise(p.a, p.b);
    const std::string where = at({{"k", p.a}, {"j", p.b}});
    if (auto f = expect_equal(where + " first", closed.first, terms.first)) return f;
    if (auto f = expect_equal(where + " second", closed.second, terms.second)) return f;
    return expect_equal(where + " third", closed.third, terms.third);
  });
}

PropertyResult check_b_double_plus_sum_form(int k_max) {
  std::vector<Point> cases;
  for (int k = 2; k <= k_max; ++k) {
    for (int j = 1; j < k; ++j) {
      cases.push_back({k, j});
    }
  }
  return run_grid("b_double_plus_vs_sum_form", cases, 1, [](const Point& p) {
    return expect_equal(at({{"k", p.a}, {"j", p.b}}), b_double_plus(p.a, p.b), b_double_plus_termwise(p.a, p.b));
  });
}

PropertyResult check_integrality(int k_max) {
  // a = 0: B_2k(k); a = 1: dominant (n = k + b); a = 2: B_2k+j and the sums (j = b).
  std::vector<Point> cases;
  for (int k = 1; k <= k_max; ++k) {
    cases.push_back({0, 0, k});
    for (int t = 1; k + t < 2 * k; ++t) {
      cases.push_back({1, t, k});
    }
    for (int j = 1; j < k; ++j) {
      cases.push_back({2, j, k});
    }
  }
  return run_grid("fractional_power_integrality", cases, 1, [](const Point& p) -> Failure {
    try {
      if (p.a == 0) {
        (void)b_double(p.c);
      } else if (p.a == 1) {
        (void)b_dominant(p.c + p.b, p.c);
      } else {
        (void)b_double_plus(p.c, p.b);
        (void)sum_eval_triple(p.c, p.b);
      }
    } catch (const IntegralityError& error) {
      return std::string(error.what());
    }
    return std::nullopt;
  });
}

// ---- generalized -------------------------------------------------------------

PropertyResult check_three_way_m(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 1; l <= n; ++l) {
      for (int k = 1; k <= n; ++k) {
        cases.push_back({n, l, k});
      }
    }
  }
  return run_grid("m_oracle_formula_one_formula_two", cases, jobs, [](const Point& p) -> Failure {
    const std::string where = at({{"n", p.a}, {"l", p.b}, {"k", p.c}});
    const Count truth = oracle::oracle_M(p.a, p.b, p.c);
    if (auto f = expect_equal(where + " formula I", m_formula_one(p.a, p.b, p.c), truth)) return f;
    return expect_equal(where + " formula II", m_formula_two(p.a, p.b, p.c), truth);
  });
}

PropertyResult check_r_two_way(int n_max, int l_max, int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 1; l <= l_max; ++l) {
      for (int k = 1; k <= k_max; ++k) {
        cases.push_back({n, l, k});
      }
    }
  }
  return run_grid("r_pie_recurrence_oracle", cases, jobs, [](const Point& p) -> Failure {
    const std::string where = at({{"n", p.a}, {"l", p.b}, {"k", p.c}});
    const Count truth = oracle::oracle_R(p.a, p.b, p.c);
    if (auto f = expect_equal(where + " pie", r_pie(p.a, p.b, p.c), truth)) return f;
    return expect_equal(where + " recurrence", r_recurrence(p.a, p.b, p.c), truth);
  });
}

PropertyResult check_m_feasibility(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 1; l <= n; ++l) {
      for (int k = 1; k <= n; ++k) {
        cases.push_back({n, l, k});
      }
    }
  }
  // Uses the raw R difference so the window is observed, not imposed.
  return run_grid("m_zero_exactly_outside_window", cases, jobs, [](const Point& p) -> Failure {
    const Count raw = r_pie(p.a - p.b, p.b, p.c - 1) - r_pie(p.a - p.b, p.b, p.c - 2);
    const bool inside = p.b + p.c - 1 <= p.a && p.a <= p.b * p.c;
    if ((raw > 0) != inside || raw < 0) {
      return describe(at({{"n", p.a}, {"l", p.b}, {"k", p.c}}), "value", raw, "inside window", inside);
    }
    return std::nullopt;
  });
}

PropertyResult check_distribution_totals(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      cases.push_back({n, k});
    }
  }
  return run_grid("distribution_total_and_mean", cases, jobs, [](const Point& p) -> Failure {
    const std::string where = at({{"n", p.a}, {"k", p.b}});
    const DistributionTable table = distribution(p.a, p.b);
    const Count total = table.total();
    if (auto f = expect_equal(where + " vs b_any", total, b_any(p.a, p.b))) return f;
    if (auto f = expect_equal(where + " vs oracle", total, oracle::oracle_B(p.a, p.b))) return f;
    if (!table.mean_bins || table.rows.empty()) {
      return where + ": empty table";
    }
    const Rational lo(table.rows.front().first);
    const Rational hi(table.rows.back().first);
    if (*table.mean_bins < lo || *table.mean_bins > hi) {
      return describe(where, "mean", *table.mean_bins, "outside support");
    }
    return std::nullopt;
  });
}

// ---- identities ----------------------------------------------------------------

PropertyResult check_lem1(int n_max, int l_max, int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int l = 1; l <= l_max; ++l) {
    for (int k = 1; k <= k_max; ++k) {
      for (int n = 0; n <= std::min(n_max, l * k); ++n) {
        cases.push_back({n, l, k});
      }
    }
  }
  return run_grid("lem1_symmetry", cases, jobs, [](const Point& p) {
    return expect_sides(at({{"n", p.a}, {"l", p.b}, {"k", p.c}}),
                        identity_check(Identity::Lem1, {p.a, p.b, p.c, 1}));
  });
}

PropertyResult check_lem2(int n_max, int l_max, int m_max, int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 1; l <= l_max; ++l) {
      for (int m = 1; m <= m_max; ++m) {
        for (int k = 1; k <= k_max; ++k) {
          cases.push_back({n, l, k, m});
        }
      }
    }
  }
  return run_grid("lem2_convolution", cases, jobs, [](const Point& p) {
    return expect_sides(at({{"n", p.a}, {"l", p.b}, {"m", p.d}, {"k", p.c}}),
                        identity_check(Identity::Lem2, {p.a, p.b, p.c, p.d}));
  });
}

PropertyResult check_lem4(int n_max, int l_max, int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 1; l <= l_max; ++l) {
      for (int k = 1; k <= k_max; ++k) {
        cases.push_back({n, l, k});
      }
    }
  }
  return run_grid("lem4_recurrence", cases, jobs, [](const Point& p) {
    return expect_sides(at({{"n", p.a}, {"l", p.b}, {"k", p.c}}),
                        identity_check(Identity::Lem4, {p.a, p.b, p.c, 1}));
  });
}

PropertyResult check_lem5(int n_max, int l_max, int k_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 0; n <= n_max; ++n) {
    for (int l = 1; l <= l_max; ++l) {
      for (int k = 1; k <= k_max; ++k) {
        cases.push_back({n, l, k});
      }
    }
  }
  return run_grid("lem5_difference", cases, jobs, [](const Point& p) {
    return expect_sides(at({{"n", p.a}, {"l", p.b}, {"k", p.c}}),
                        identity_check(Identity::Lem5, {p.a, p.b, p.c, 1}));
  });
}

PropertyResult check_k_partition(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 1; n <= n_max; ++n) {
    for (int l = 1; l <= n; ++l) {
      cases.push_back({n, l});
    }
  }
  return run_grid("k_partition_over_max", cases, jobs, [](const Point& p) -> Failure {
    Count by_oracle = 0;
    Count by_formula = 0;
    for (int i = 1; i <= p.a - p.b + 1; ++i) {
      by_oracle += oracle::oracle_M(p.a, p.b, i);
      by_formula += m_formula_two(p.a, p.b, i);
    }
    const std::string where = at({{"n", p.a}, {"l", p.b}});
    if (auto f = expect_equal(where + " oracle sum", by_oracle, k_total(p.a, p.b))) return f;
    return expect_equal(where + " formula sum", by_formula, k_total(p.a, p.b));
  });
}

PropertyResult check_n_partition(int lk_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int l = 1; l <= lk_max; ++l) {
    for (int k = 1; l * k <= lk_max; ++k) {
      cases.push_back({l, k});
    }
  }
  return run_grid("n_partition_over_total", cases, jobs, [](const Point& p) -> Failure {
    Count by_oracle = 0;
    Count by_formula = 0;
    for (int i = p.b + p.a - 1; i <= p.a * p.b; ++i) {
      by_oracle += oracle::oracle_M(i, p.a, p.b);
      by_formula += m_formula_two(i, p.a, p.b);
    }
    const std::string where = at({{"l", p.a}, {"k", p.b}});
    if (auto f = expect_equal(where + " oracle sum", by_oracle, n_total(p.a, p.b))) return f;
    return expect_equal(where + " formula sum", by_formula, n_total(p.a, p.b));
  });
}

// ---- bounds --------------------------------------------------------------------

PropertyResult check_alpha_beta(int max) {
  std::vector<Point> cases;
  for (int n = 1; n <= max; ++n) {
    for (int l = 1; l <= max; ++l) {
      for (int k = 1; k <= max; ++k) {
        cases.push_back({n, l, k});
      }
    }
  }
  return run_grid("alpha_beta_definition", cases, 1, [](const Point& p) -> Failure {
    const int n = p.a;
    const int l = p.b;
    const int k = p.c;
    const AlphaBeta ab = alpha_beta(n, l, k);
    const auto satisfies = [&](std::int64_t t, std::int64_t step) { return n - t * step - 1 >= l - 1; };
    const auto valid = [&](std::int64_t value, std::int64_t step) {
      if (value == -1) {
        return !satisfies(0, step);
      }
      if (value < 0 || value > l || !satisfies(value, step)) {
        return false;
      }
      // Above the maximum the defining inequality must fail for every t.
      for (std::int64_t t = value + 1; t <= l; ++t) {
        if (satisfies(t, step)) return false;
      }
      return true;
    };
    if (!valid(ab.alpha, k) || !valid(ab.beta, k - 1) || ab.alpha > ab.beta) {
      return describe(at({{"n", n}, {"l", l}, {"k", k}}), "alpha", ab.alpha, "beta", ab.beta);
    }
    return std::nullopt;
  });
}

PropertyResult check_stirling(int m_max) {
  std::vector<Point> cases;
  for (int m = 1; m <= m_max; ++m) {
    cases.push_back({m});
  }
  return run_grid("stirling_sandwich", cases, 1, [](const Point& p) -> Failure {
    BigInt factorial = 1;
    for (int i = 2; i <= p.a; ++i) {
      factorial *= i;
    }
    const double exact = factorial.convert_to<double>();
    const StirlingInterval bounds = stirling_bounds(p.a);
    if (!(bounds.lower <= exact && exact <= bounds.upper)) {
      return describe(at({{"m", p.a}}), "lower", bounds.lower, "exact", exact, "upper", bounds.upper);
    }
    return std::nullopt;
  });
}

EnvelopeSweep sweep_envelope(int n_max, unsigned jobs) {
  std::vector<Point> cases;
  for (int n = 2; n <= n_max; ++n) {
    for (int l = 1; l <= n; ++l) {
      for (int k = 1; k <= n; ++k) {
        if (n <= l * k) {
          cases.push_back({n, l, k});
        }
      }
    }
  }
  EnvelopeSweep sweep;
  std::vector<std::optional<ContainmentRow>> rows(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) {
    try {
      rows[i] = containment_point(cases[i].a, cases[i].b, cases[i].c);
    } catch (const std::exception&) {
      rows[i].reset();
    }
  });
  for (auto& row : rows) {
    if (!row || !row->interval.finite()) {
      ++sweep.numerical_errors;
      if (!row) continue;
    }
    if (row->interval.exact_applicable) {
      ++sweep.applicable;
      if (row->contained) ++sweep.contained_applicable;
      if (!(row->interval.lower <= row->interval.upper)) ++sweep.ordered_violations;
    }
    sweep.rows.push_back(std::move(*row));
  }
  return sweep;
}

// ---- suites ----------------------------------------------------------------------

std::vector<PropertyResult> run_suite(Suite suite, const VerifyLimits& limits) {
  std::vector<PropertyResult> out;
  const bool all = suite == Suite::All;
  const unsigned jobs = limits.jobs;

  if (all || suite == Suite::ClosedForms) {
    out.push_back(check_regime_totality(100, 100));
    out.push_back(check_b_closed_vs_oracle(limits.n_max, jobs));
    out.push_back(check_b_any_vs_oracle(limits.n_max, jobs));
    out.push_back(check_m_closed_vs_oracle(limits.n_max, jobs));
    out.push_back(check_t_vs_oracle(limits.k_max, jobs));
    out.push_back(check_t_fixed_point(limits.k_max));
    out.push_back(check_f_vs_oracle(limits.k_max, jobs));
    out.push_back(check_u_vs_oracle(limits.k_max, jobs));
    out.push_back(check_g_vs_oracle(limits.k_max, jobs));
    out.push_back(check_sum_eval(std::max(12, limits.k_max)));
    out.push_back(check_b_double_plus_sum_form(std::max(12, limits.k_max)));
    out.push_back(check_integrality(40));
  }
  if (all || suite == Suite::Identities) {
    out.push_back(check_binomial_vs_subsets(std::min(limits.n_max, 20), jobs));
    out.push_back(check_pascal_rule(60));
    out.push_back(check_binomial_zero_outside(-10, 60));
    out.push_back(check_weighted_sum_m1(200));
    out.push_back(check_weighted_sum_m2(200));
    out.push_back(check_parity_sums(200));
    out.push_back(check_lem1(limits.n_max, limits.l_max, limits.k_max, jobs));
    // The convolution and partition sums grow fast; their grids stay capped.
    out.push_back(check_lem2(std::min(limits.n_max, 14), std::min(limits.l_max, 5), std::min(limits.k_max, 4),
                             std::min(limits.k_max, 4), jobs));
    out.push_back(check_lem4(limits.n_max, std::min(limits.l_max, 6), std::min(limits.k_max, 6), jobs));
    out.push_back(check_lem5(limits.n_max, std::min(limits.l_max, 6), std::min(limits.k_max, 6), jobs));
    out.push_back(check_k_partition(std::min(limits.n_max, 18), jobs));
    out.push_back(check_n_partition(limits.n_max, jobs));
  }
  if (all || suite == Suite::Generalized) {
    out.push_back(check_three_way_m(limits.n_max, jobs));
    out.push_back(check_r_two_way(limits.n_max, limits.l_max, limits.k_max, jobs));
    out.push_back(check_m_feasibility(limits.n_max, jobs));
    out.push_back(check_distribution_totals(limits.n_max, jobs));
  }
  if (all || suite == Suite::Bounds) {
    out.push_back(check_alpha_beta(30));
    out.push_back(check_stirling(170));

    const EnvelopeSweep sweep = sweep_envelope(limits.n_max, jobs);
    PropertyResult numerics{"envelope_no_numerical_errors", sweep.numerical_errors == 0, true, sweep.rows.size(), ""};
    if (!numerics.passed) {
      numerics.detail = std::to_string(sweep.numerical_errors) + " points produced NaN/inf or threw";
    }
    out.push_back(numerics);

    PropertyResult ordered{"envelope_lower_le_upper", sweep.ordered_violations == 0, true, sweep.applicable, ""};
    if (!ordered.passed) {
      ordered.detail = std::to_string(sweep.ordered_violations) + " applicable points have lower > upper";
    }
    out.push_back(ordered);

    PropertyResult containment{"envelope_containment", sweep.contained_applicable == sweep.applicable, false,
                               sweep.applicable, ""};
    containment.detail = "contained at " + std::to_string(sweep.contained_applicable) + " of " +
                         std::to_string(sweep.applicable) + " applicable points (" +
                         std::to_string(sweep.rows.size()) + " evaluated)";
    if (!limits.report_path.empty()) {
      std::ofstream file(limits.report_path);
      write_containment_csv(file, sweep.rows);
      containment.detail += "; report written to " + limits.report_path;
    }
    out.push_back(containment);
  }
  return out;
}

bool print_results(std::ostream& out, const std::vector<PropertyResult>& results) {
  bool ok = true;
  for (const auto& result : results) {
    const char* status = !result.required ? "REPORT" : (result.passed ? "PASS" : "FAIL");
    out << status << ' ' << result.name << " (cases=" << result.cases << ')';
    if (!result.detail.empty()) {
      out << ": " << result.detail;
    }
    out << '\n';
    if (result.required && !result.passed) {
      ok = false;
    }
  }
  return ok;
}

}  // namespace binpack::cli
