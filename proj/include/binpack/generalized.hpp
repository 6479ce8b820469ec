#pragma once

// General-position counts: compositions with bounded parts (R), with an
// exact largest part (M) for any (n, l, k), the partition sums K and N, the
// identity suite for R, and the per-l distribution of B.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "binpack/core_combinatorics.hpp"

namespace binpack {

/// Which evaluation path to use for R inside composite formulas.
enum class REvaluation { InclusionExclusion, Recurrence };

/// Weak compositions of n into l parts, each at most `cap`, by the
/// alternating inclusion-exclusion sum over the extended binomial.
///
/// Conventions outside the counting domain: n < 0 gives 0; cap < 0 gives 0;
/// cap == 0 or l == 0 gives 1 when n == 0 and 0 otherwise.
Count r_pie(std::int64_t n, std::int64_t l, std::int64_t cap);

/// Same value as r_pie, by dynamic programming over the number of parts
/// with one rolling row of n + 1 entries.
Count r_recurrence(std::int64_t n, std::int64_t l, std::int64_t cap);

Count r_count(std::int64_t n, std::int64_t l, std::int64_t cap, REvaluation how);

/// M_{n,l,k} by inclusion-exclusion over the number of full bins.
/// Returns 0 outside l + k - 1 <= n <= l k.
Count m_formula_one(std::int64_t n, std::int64_t l, std::int64_t k,
                    REvaluation how = REvaluation::InclusionExclusion);

/// M_{n,l,k} = R_{n-l,l,k-1} - R_{n-l,l,k-2}. Returns 0 outside
/// l + k - 1 <= n <= l k.
Count m_formula_two(std::int64_t n, std::int64_t l, std::int64_t k,
                    REvaluation how = REvaluation::InclusionExclusion);

/// True when l + k - 1 <= n <= l k.
bool m_feasible(std::int64_t n, std::int64_t l, std::int64_t k);

/// C(n-1, l-1); 0 when l > n.
Count k_total(std::int64_t n, std::int64_t l);

/// k^l - (k-1)^l.
Count n_total(std::int64_t l, std::int64_t k);

/// Identity labels as they are numbered in the literature on these counts.
/// There is intentionally no Lem3.
enum class Identity { Lem1, Lem2, Lem4, Lem5 };

std::optional<Identity> parse_identity(std::string_view name);
std::string_view identity_name(Identity id);

struct IdentityParams {
  std::int64_t n = 0;
  std::int64_t l = 1;
  std::int64_t k = 1;
  std::int64_t m = 1;  // only used by Lem2
};

/// Evaluates both sides of the chosen identity with r_pie:
///   Lem1: R(n,l,k)                      vs R(lk-n,l,k)          (0 <= n <= lk)
///   Lem2: R(n,l,m+k)                    vs sum_i R(i,l,m) R(n-i,l,k)
///   Lem4: R(n,l+1,k)                    vs sum_{i=0}^{k} R(n-i,l,k)
///   Lem5: R(n+1,l+1,k) - R(n,l+1,k)     vs R(n+1,l,k) - R(n-k,l,k)
IdentitySides identity_check(Identity id, const IdentityParams& params);

/// Number of compositions of n with largest part k, split by number of bins.
struct DistributionTable {
  std::int64_t n = 0;
  std::int64_t k = 0;
  /// (l, M_{n,l,k}) for every l with a nonzero count, ascending.
  std::vector<std::pair<std::int64_t, Count>> rows;
  /// sum l M / sum M; empty when there are no configurations at all.
  std::optional<Rational> mean_bins;

  Count total() const;
};

/// Requires 1 <= k <= n.
DistributionTable distribution(std::int64_t n, std::int64_t k);

/// Decimal rendering with `significant` significant digits.
std::string to_decimal_string(const Rational& value, int significant = 12);

}  // namespace binpack
