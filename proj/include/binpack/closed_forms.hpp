#pragma once

// Closed forms for the number of compositions with a prescribed largest part,
// in the regimes where one is known: a dominant part (n/2 < k < n), n = 2k,
// and n = 2k + j with 0 < j < k. Also the intermediate counts used to derive
// the last regime.
//
// Parameter naming follows the quantity being counted: n balls, l bins,
// largest bin k, and j = n - 2k for the n = 2k + j family.

#include <cstdint>
#include <string_view>

#include "binpack/core_combinatorics.hpp"

namespace binpack {

enum class RegimeTag {
  Trivial,     // n < k
  Single,      // n == k
  Dominant,    // n/2 < k < n
  Double,      // n == 2k
  DoublePlus,  // n == 2k + j, 0 < j < k
  General,     // n >= 3k
};

struct BRegime {
  RegimeTag tag;
  std::int64_t j;  // n mod k (0 outside the modular regimes)
  std::int64_t m;  // n div k
};

/// Total classification of (n, k), n, k >= 1.
BRegime classify(std::int64_t n, std::int64_t k);

std::string_view regime_name(RegimeTag tag);

/// l C(n-k-1, l-2); requires n/2 < k < n and 2 <= l <= n-k+1.
Count m_dominant(std::int64_t n, std::int64_t l, std::int64_t k);

/// (n-k+3) 2^(n-k-2); requires n/2 < k < n.
Count b_dominant(std::int64_t n, std::int64_t k);

/// Compositions of 2k into l parts with largest part k; 2 <= l <= k+1.
Count m_double(std::int64_t k, std::int64_t l);

/// (k+3) 2^(k-2) - 1; k >= 1.
Count b_double(std::int64_t k);

/// Compositions of 2k + j with one part k and another part k + i.
/// Requires 1 <= i <= j < k; i == j gives the two-part arrangements only.
Count t_two_marked(std::int64_t k, std::int64_t j, std::int64_t i);

/// Compositions of 2k + j with at least t parts equal to k, t in {1, 2};
/// requires 1 <= j < k.
Count f_at_least(std::int64_t k, std::int64_t j, std::int64_t t);

/// Fixed-length version of t_two_marked: (l^2 - l) C(j-i-1, l-3).
/// Requires 1 <= i < j < k and 3 <= l <= j-i+2.
Count u_two_marked_fixed(std::int64_t k, std::int64_t j, std::int64_t i, std::int64_t l);

/// Fixed-length version of f_at_least for t = 2: (l^2 - l)/2 C(j-1, l-3).
/// Requires 1 <= j < k and 3 <= l <= j+2.
Count g_two_full_fixed(std::int64_t k, std::int64_t j, std::int64_t l);

/// Compositions of 2k + j into l parts with largest part k.
/// Requires 0 < j < k and 2 <= l <= k+j+1.
Count m_double_plus(std::int64_t k, std::int64_t j, std::int64_t l);

struct SumEvalTriple {
  Count first;
  Count second;
  Count third;
  bool operator==(const SumEvalTriple&) const = default;
};

/// Closed-form values of the three sums making up B_{2k+j,k}:
///   (k+j+3) 2^(k+j-2),  2^(j-4)(j^2+9j+14),  2^(j-3)(j^2+5j+2) - 2.
/// Each is evaluated as an exact rational and must come out integral.
/// Requires 1 <= j < k.
SumEvalTriple sum_eval_triple(std::int64_t k, std::int64_t j);

/// The same three sums evaluated term by term from their summation forms.
SumEvalTriple sum_eval_termwise(std::int64_t k, std::int64_t j);

/// (k+j+3) 2^(k+j-2) - (3j^2+19j+18) 2^(j-4); requires 0 < j < k.
Count b_double_plus(std::int64_t k, std::int64_t j);

/// B_{2k+j,k} from its summation form over the number of bins, every sum
/// evaluated term by term. Requires 0 < j < k.
Count b_double_plus_termwise(std::int64_t k, std::int64_t j);

/// sum_{l=2}^{n-k+1} l C(n-k-1, l-2); requires n/2 < k < n.
Count b_dominant_termwise(std::int64_t n, std::int64_t k);

/// B_{n,k} for any n, k >= 1. Uses the closed form of the regime when one
/// exists; for n >= 3k it sums the generalized per-l formula (no closed form
/// is known there).
Count b_any(std::int64_t n, std::int64_t k);

/// True when classify(n, k) has a closed form (every regime but General).
bool has_closed_form(std::int64_t n, std::int64_t k);

}  // namespace binpack
