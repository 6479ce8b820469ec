#pragma once

// Verification sweeps: each property is checked over an explicit grid and
// reports the first counterexample in grid order.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "binpack/bounds.hpp"

namespace binpack::cli {

struct PropertyResult {
  std::string name;
  bool passed = true;
  /// Report-only properties never affect the exit status.
  bool required = true;
  std::size_t cases = 0;
  /// Counterexample on failure; free-form summary for report-only results.
  std::string detail;
};

struct VerifyLimits {
  int n_max = 20;
  int l_max = 8;
  int k_max = 8;
  unsigned jobs = 1;
  /// Where the bounds suite writes its containment CSV (empty: don't write).
  std::string report_path;
};

enum class Suite { ClosedForms, Identities, Generalized, Bounds, All };

std::optional<Suite> parse_suite(const std::string& name);

std::vector<PropertyResult> run_suite(Suite suite, const VerifyLimits& limits);

/// Prints one line per property; returns true when every required property
/// passed.
bool print_results(std::ostream& out, const std::vector<PropertyResult>& results);

// Individual properties, exposed for the acceptance suite.

PropertyResult check_binomial_vs_subsets(int n_max, unsigned jobs);
PropertyResult check_pascal_rule(int n_max);
PropertyResult check_binomial_zero_outside(int lo, int hi);
PropertyResult check_weighted_sum_m1(int n_max);
PropertyResult check_weighted_sum_m2(int n_max);
PropertyResult check_parity_sums(int m_max);

PropertyResult check_regime_totality(int n_max, int k_max);
PropertyResult check_b_closed_vs_oracle(int n_max, unsigned jobs);
PropertyResult check_b_any_vs_oracle(int n_max, unsigned jobs);
PropertyResult check_m_closed_vs_oracle(int n_max, unsigned jobs);
PropertyResult check_t_vs_oracle(int k_max, unsigned jobs);
PropertyResult check_t_fixed_point(int k_max);
PropertyResult check_f_vs_oracle(int k_max, unsigned jobs);
PropertyResult check_u_vs_oracle(int k_max, unsigned jobs);
PropertyResult check_g_vs_oracle(int k_max, unsigned jobs);
PropertyResult check_sum_eval(int k_max);
PropertyResult check_b_double_plus_sum_form(int k_max);
PropertyResult check_integrality(int k_max);

PropertyResult check_three_way_m(int n_max, unsigned jobs);
PropertyResult check_r_two_way(int n_max, int l_max, int k_max, unsigned jobs);
PropertyResult check_m_feasibility(int n_max, unsigned jobs);
PropertyResult check_distribution_totals(int n_max, unsigned jobs);

PropertyResult check_lem1(int n_max, int l_max, int k_max, unsigned jobs);
PropertyResult check_lem2(int n_max, int l_max, int m_max, int k_max, unsigned jobs);
PropertyResult check_lem4(int n_max, int l_max, int k_max, unsigned jobs);
PropertyResult check_lem5(int n_max, int l_max, int k_max, unsigned jobs);
PropertyResult check_k_partition(int n_max, unsigned jobs);
PropertyResult check_n_partition(int lk_max, unsigned jobs);

PropertyResult check_alpha_beta(int max);
PropertyResult check_stirling(int m_max);

/// Envelope evaluated over its hypothesis domain 2 <= n <= n_max, l <= n,
/// k <= n <= l k.
struct EnvelopeSweep {
  std::vector<ContainmentRow> rows;
  std::size_t numerical_errors = 0;
  std::size_t applicable = 0;
  std::size_t contained_applicable = 0;
  std::size_t ordered_violations = 0;  // applicable rows with lower > upper
};

EnvelopeSweep sweep_envelope(int n_max, unsigned jobs);

}  // namespace binpack::cli
