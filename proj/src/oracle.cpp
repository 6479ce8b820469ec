#include "binpack/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace binpack::oracle {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw DomainError(message);
  }
}

// Counts compositions of `remaining` into exactly `slots` parts in [1, cap],
// requiring at least one part equal to cap unless `has_max` is already set.
std::uint64_t count_exact_max(int remaining, int slots, int cap, bool has_max) {
  if (slots == 0) {
    return (remaining == 0 && has_max) ? 1 : 0;
  }
  if (remaining < slots || remaining > slots * cap) {
    return 0;
  }
  if (!has_max && remaining < cap + (slots - 1)) {
    return 0;
  }
  std::uint64_t total = 0;
  const int top = std::min(cap, remaining - (slots - 1));
  for (int part = 1; part <= top; ++part) {
    total += count_exact_max(remaining - part, slots - 1, cap, has_max || part == cap);
  }
  return total;
}

std::uint64_t count_weak_capped(int remaining, int slots, int cap) {
  if (slots == 0) {
    return remaining == 0 ? 1 : 0;
  }
  if (remaining > slots * cap) {
    return 0;
  }
  std::uint64_t total = 0;
  const int top = std::min(cap, remaining);
  for (int part = 0; part <= top; ++part) {
    total += count_weak_capped(remaining - part, slots - 1, cap);
  }
  return total;
}

// Walks compositions of n with any number of parts, tracking how many parts
// equal each of the marked values. `still_needed` is the smallest total the
// remaining parts must reach to satisfy the predicate.
struct MarkedWalk {
  int first_value;
  int first_needed;
  int second_value;  // 0 when there is no second marked value
  int second_needed;
  std::optional<int> length;

  std::uint64_t run(int remaining, int depth, int first_seen, int second_seen) const {
    const int missing_first = std::max(0, first_needed - first_seen);
    const int missing_second = std::max(0, second_needed - second_seen);
    if (remaining == 0) {
      const bool ok = missing_first == 0 && missing_second == 0;
      return (ok && (!length || depth == *length)) ? 1 : 0;
    }
    if (remaining < missing_first * first_value + missing_second * second_value) {
      return 0;
    }
    if (length && depth >= *length) {
      return 0;
    }
    std::uint64_t total = 0;
    for (int part = 1; part <= remaining; ++part) {
      total += run(remaining - part, depth + 1, first_seen + (part == first_value ? 1 : 0),
                   second_seen + (second_value != 0 && part == second_value ? 1 : 0));
    }
    return total;
  }
};

}  // namespace

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::max_part() const {
  return parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
}

CompositionStream::CompositionStream(int n, int length, int max_part)
    : n_(n), length_(length), cap_(max_part > 0 ? max_part : std::max(n, 1)) {
  if (length_ < 1 || n_ < length_ || n_ > static_cast<long>(length_) * cap_) {
    done_ = true;
    return;
  }
  parts_.assign(static_cast<std::size_t>(length_), 0);
}

void CompositionStream::fill_from(std::size_t pos, int remaining) {
  // Lexicographically smallest tail: each part as small as the rest allows.
  for (std::size_t p = pos; p < parts_.size(); ++p) {
    const int slots_after = static_cast<int>(parts_.size() - p - 1);
    const int part = std::max(1, remaining - slots_after * cap_);
    parts_[p] = part;
    remaining -= part;
  }
}

std::optional<Composition> CompositionStream::next() {
  if (done_) {
    return std::nullopt;
  }
  if (!started_) {
    started_ = true;
    fill_from(0, n_);
    return Composition{parts_};
  }
  int suffix = parts_.back();
  for (int i = length_ - 2; i >= 0; --i) {
    const auto idx = static_cast<std::size_t>(i);
    suffix += parts_[idx];
    const int bumped = parts_[idx] + 1;
    const int rest = suffix - bumped;
    const int slots_after = length_ - 1 - i;
    if (bumped <= cap_ && rest >= slots_after) {
      parts_[idx] = bumped;
      fill_from(idx + 1, rest);
      return Composition{parts_};
    }
  }
  done_ = true;
  return std::nullopt;
}

CompositionStream enumerate_compositions(int n, int l) { return CompositionStream(n, l); }

Count oracle_K(int n, int l) {
  require(n >= 1 && l >= 1, "oracle_K requires n, l >= 1");
  std::uint64_t total = 0;
  auto stream = enumerate_compositions(n, l);
  while (stream.next()) {
    ++total;
  }
  return total;
}

Count oracle_M(int n, int l, int k) {
  require(n >= 1 && l >= 1 && k >= 1, "oracle_M requires n, l, k >= 1");
  return count_exact_max(n, l, k, false);
}

Count oracle_R(int n, int l, int k) {
  require(n >= 0 && l >= 1 && k >= 1, "oracle_R requires n >= 0, l >= 1, k >= 1");
  return count_weak_capped(n, l, k);
}

Count oracle_B(int n, int k) {
  require(n >= 1 && k >= 1, "oracle_B requires n, k >= 1");
  Count total = 0;
  for (int l = 1; l <= n; ++l) {
    total += oracle_M(n, l, k);
  }
  return total;
}

Count oracle_N(int l, int k) {
  require(l >= 1 && k >= 1, "oracle_N requires l, k >= 1");
  Count total = 0;
  for (int n = l; n <= l * k; ++n) {
    total += oracle_M(n, l, k);
  }
  return total;
}

Count oracle_two_marked(int n, int k, int i, std::optional<int> length) {
  const int j = n - 2 * k;
  require(1 <= i && i <= j && j < k,
          "oracle_two_marked requires n = 2k + j with 1 <= i <= j < k");
  const MarkedWalk walk{k, 1, k + i, 1, length};
  return walk.run(n, 0, 0, 0);
}

Count oracle_at_least_t_full(int n, int k, int t, std::optional<int> length) {
  const int j = n - 2 * k;
  require(t == 1 || t == 2, "oracle_at_least_t_full requires t in {1, 2}");
  require(k >= 1 && 0 <= j && j < k, "oracle_at_least_t_full requires n = 2k + j with 0 <= j < k");
  const MarkedWalk walk{k, t, 0, 0, length};
  return walk.run(n, 0, 0, 0);
}

}  // namespace binpack::oracle
