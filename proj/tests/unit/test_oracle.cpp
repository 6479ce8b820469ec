#include <doctest.h>

#include <set>

#include "binpack/core_combinatorics.hpp"
#include "binpack/oracle.hpp"

using namespace binpack;
using namespace binpack::oracle;

namespace {

std::vector<std::vector<int>> drain(CompositionStream stream) {
  std::vector<std::vector<int>> out;
  while (auto c = stream.next()) {
    out.push_back(c->parts);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate small cases") {
  CHECK(drain(enumerate_compositions(3, 2)) == std::vector<std::vector<int>>{{1, 2}, {2, 1}});
  CHECK(drain(enumerate_compositions(4, 1)) == std::vector<std::vector<int>>{{4}});
  CHECK(drain(enumerate_compositions(5, 3)).size() == 6);
  CHECK(drain(enumerate_compositions(3, 4)).empty());
  CHECK(drain(enumerate_compositions(3, 0)).empty());
}

TEST_CASE("stream is lexicographic, duplicate free and complete") {
  for (int n = 1; n <= 18; ++n) {
    for (int l = 1; l <= n; ++l) {
      auto all = drain(enumerate_compositions(n, l));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::set(all.begin(), all.end()).size() == all.size());
      CHECK(Count(all.size()) == binomial(n - 1, l - 1));
    }
  }
}

TEST_CASE("capped stream only yields parts within the cap") {
  CompositionStream stream(9, 4, 3);
  int seen = 0;
  while (auto c = stream.next()) {
    CHECK(c->max_part() <= 3);
    CHECK(c->total() == 9);
    ++seen;
  }
  CHECK(seen == 16);
}

TEST_CASE("all compositions of n number 2^(n-1)") {
  for (int n = 1; n <= 24; ++n) {
    Count total = 0;
    for (int l = 1; l <= n; ++l) {
      total += oracle_K(n, l);
    }
    CHECK(total == pow2(n - 1));
  }
}

TEST_CASE("oracle_M") {
  CHECK(oracle_M(8, 5, 4) == 5);
  CHECK(oracle_M(8, 4, 3) == 18);
  CHECK(oracle_M(5, 2, 5) == 0);
}

TEST_CASE("oracle_R") {
  CHECK(oracle_R(4, 2, 2) == 1);
  CHECK(oracle_R(0, 3, 2) == 1);
  CHECK(oracle_R(3, 5, 3) == 35);
  CHECK(oracle_R(2, 2, 2) == 3);
}

TEST_CASE("oracle_R symmetry") {
  for (int l = 1; l <= 6; ++l) {
    for (int k = 1; k <= 6; ++k) {
      for (int n = 0; n <= l * k; ++n) {
        CHECK(oracle_R(n, l, k) == oracle_R(l * k - n, l, k));
      }
    }
  }
}

TEST_CASE("partition of compositions by largest part") {
  for (int n = 1; n <= 20; ++n) {
    for (int l = 1; l <= n; ++l) {
      Count sum = 0;
      for (int k = 1; k <= n - l + 1; ++k) {
        sum += oracle_M(n, l, k);
      }
      CHECK(sum == binomial(n - 1, l - 1));
    }
  }
}

TEST_CASE("oracle_B") {
  CHECK(oracle_B(4, 2) == 4);
  CHECK(oracle_B(5, 3) == 5);
  for (int k = 1; k <= 12; ++k) {
    CHECK(oracle_B(k, k) == 1);
  }
  CHECK(oracle_B(9, 3) == 94);
  CHECK(oracle_B(15, 3) == 4781);
}

TEST_CASE("oracle_N") {
  CHECK(oracle_N(2, 2) == 3);
  CHECK(oracle_N(3, 3) == 19);
  CHECK(oracle_N(4, 1) == 1);
}

TEST_CASE("two marked bins") {
  CHECK(oracle_two_marked(8, 3, 1) == 6);
  CHECK(oracle_two_marked(9, 4, 1) == 2);
  CHECK(oracle_two_marked(13, 5, 1) == 18);
  for (int k = 2; k <= 7; ++k) {
    for (int j = 1; j < k; ++j) {
      CHECK(oracle_two_marked(2 * k + j, k, j) == 2);
    }
  }
  CHECK(oracle_two_marked(8, 3, 1, 3) == 6);
  CHECK_THROWS_AS(oracle_two_marked(8, 3, 3), DomainError);
}

TEST_CASE("at least t full bins") {
  CHECK(oracle_at_least_t_full(5, 2, 2) == 3);
  CHECK(oracle_at_least_t_full(7, 3, 2) == 3);
  CHECK(oracle_at_least_t_full(7, 3, 1) == 25);
  CHECK(oracle_at_least_t_full(8, 3, 1) == 55);
  CHECK(oracle_at_least_t_full(6, 3, 2, 2) == 1);
  CHECK(oracle_at_least_t_full(5, 2, 2, 3) == 3);
  CHECK_THROWS_AS(oracle_at_least_t_full(7, 3, 3), DomainError);
}
