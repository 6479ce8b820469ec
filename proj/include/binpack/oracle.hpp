#pragma once

// Brute-force ground truth. Every function here walks the configurations it
// counts one by one (with pruning that never changes the counted set); none
// of them evaluates a closed form or a binomial coefficient.

#include <cstdint>
#include <optional>
#include <vector>

#include "binpack/core_combinatorics.hpp"

namespace binpack::oracle {

/// One arrangement of balls into nonempty ordered bins.
struct Composition {
  std::vector<int> parts;

  int total() const;
  int max_part() const;
  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;
};

/// Lexicographic stream of the compositions of `n` into exactly `length`
/// positive parts, each at most `max_part` (0 means unbounded).
/// Single consumer; holds only the current composition.
class CompositionStream {
 public:
  CompositionStream(int n, int length, int max_part = 0);

  /// The next composition, or nullopt once the stream is exhausted.
  std::optional<Composition> next();

 private:
  void fill_from(std::size_t pos, int remaining);

  int n_;
  int length_;
  int cap_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> parts_;
};

/// Compositions of n into exactly l positive parts (empty stream when
/// l == 0 or l > n).
CompositionStream enumerate_compositions(int n, int l);

/// Number of compositions of n into exactly l parts, by enumeration.
Count oracle_K(int n, int l);

/// Compositions of n into l positive parts whose largest part is exactly k.
Count oracle_M(int n, int l, int k);

/// Weak compositions of n into l parts, each at most k.
Count oracle_R(int n, int l, int k);

/// Compositions of n (any number of parts) whose largest part is exactly k.
Count oracle_B(int n, int k);

/// Sum over every total of oracle_M(total, l, k).
Count oracle_N(int l, int k);

/// Compositions of n = 2k + j (1 <= i <= j < k) containing a part equal to k
/// and another part equal to k + i. `length` restricts to exactly that many
/// parts.
Count oracle_two_marked(int n, int k, int i, std::optional<int> length = std::nullopt);

/// Compositions of n = 2k + j (0 <= j < k) with at least t parts equal to k,
/// t in {1, 2}. `length` restricts to exactly that many parts.
Count oracle_at_least_t_full(int n, int k, int t, std::optional<int> length = std::nullopt);

}  // namespace binpack::oracle
