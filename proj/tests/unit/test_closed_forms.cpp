#include <doctest.h>

#include "binpack/cli/verify.hpp"
#include "binpack/closed_forms.hpp"
#include "binpack/oracle.hpp"

using namespace binpack;

TEST_CASE("regime classification") {
  CHECK(classify(3, 5).tag == RegimeTag::Trivial);
  CHECK(classify(4, 4).tag == RegimeTag::Single);
  CHECK(classify(7, 4).tag == RegimeTag::Dominant);
  CHECK(classify(8, 4).tag == RegimeTag::Double);
  CHECK(classify(9, 4).tag == RegimeTag::DoublePlus);
  CHECK(classify(9, 4).j == 1);
  CHECK(classify(12, 4).tag == RegimeTag::General);
  CHECK(classify(12, 4).m == 3);
  CHECK_THROWS_AS(classify(0, 1), DomainError);
}

TEST_CASE("regime totality on [1,100]^2") {
  const auto r = cli::check_regime_totality(100, 100);
  CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("dominant bin") {
  CHECK(m_dominant(5, 2, 3) == 2);
  CHECK(m_dominant(9, 3, 5) == 9);
  for (int n = 3; n <= 15; ++n) {
    for (int k = n / 2 + 1; k < n; ++k) {
      CHECK(m_dominant(n, n - k + 1, k) == n - k + 1);
    }
  }
  CHECK(b_dominant(5, 3) == 5);
  CHECK(b_dominant(7, 4) == 12);
  for (int n = 3; n <= 20; ++n) {
    CHECK(b_dominant(n, n - 1) == 2);
  }
  CHECK_THROWS_AS(b_dominant(8, 4), DomainError);
  CHECK_THROWS_AS(m_dominant(7, 5, 4), DomainError);
}

TEST_CASE("dominant bin at large n") {
  // 53 * 2^48
  CHECK(b_dominant(200, 150) == 53 * pow2(48));
  CHECK(b_dominant(200, 150) == b_dominant_termwise(200, 150));
}

TEST_CASE("two bins of size k") {
  for (int k = 1; k <= 8; ++k) {
    CHECK(m_double(k, 2) == 1);
  }
  CHECK(m_double(2, 3) == 3);
  CHECK(m_double(4, 4) == 12);
  CHECK(b_double(1) == 1);
  CHECK(b_double(2) == 4);
  CHECK(b_double(5) == 63);
}

TEST_CASE("two marked bins") {
  CHECK(t_two_marked(3, 2, 1) == 6);
  CHECK(t_two_marked(5, 3, 1) == 18);
  for (int k = 2; k <= 10; ++k) {
    for (int j = 1; j < k; ++j) {
      CHECK(t_two_marked(k, j, j) == 2);
    }
  }
  CHECK_THROWS_AS(t_two_marked(3, 3, 1), DomainError);
}

TEST_CASE("at least t full bins") {
  CHECK(f_at_least(2, 1, 2) == 3);
  CHECK(f_at_least(3, 1, 2) == 3);
  CHECK(f_at_least(3, 2, 1) == 55);
  CHECK(f_at_least(3, 1, 1) == 25);
}

TEST_CASE("fixed-length counts") {
  CHECK(u_two_marked_fixed(3, 2, 1, 3) == 6);
  CHECK(u_two_marked_fixed(5, 4, 3, 3) == 6);
  CHECK(u_two_marked_fixed(5, 4, 1, 5) == 20);
  CHECK(g_two_full_fixed(2, 1, 3) == 3);
  CHECK(g_two_full_fixed(4, 3, 3) == 3);
  CHECK(g_two_full_fixed(4, 3, 5) == 10);
}

TEST_CASE("per-l count past two bins of size k") {
  CHECK(m_double_plus(3, 2, 2) == 0);
  CHECK(m_double_plus(3, 2, 4) == 18);
  CHECK(m_double_plus(4, 1, 3) == 9);
}

TEST_CASE("sum evaluations") {
  const SumEvalTriple t = sum_eval_triple(3, 1);
  CHECK(t.first == 28);
  CHECK(t.second == 3);
  CHECK(t.third == 0);
  CHECK(sum_eval_termwise(3, 1) == t);
  CHECK_THROWS_AS(sum_eval_triple(3, 3), DomainError);
}

TEST_CASE("closed form past two bins of size k") {
  CHECK(b_double_plus(3, 1) == 23);
  CHECK(b_double_plus(4, 1) == 59);
  CHECK(b_double_plus(5, 4) == 1394);
  CHECK_THROWS_AS(b_double_plus(3, 0), DomainError);
}

TEST_CASE("dispatcher") {
  CHECK(b_any(3, 5) == 0);
  CHECK(b_any(4, 4) == 1);
  CHECK(b_any(9, 3) == 94);
  CHECK(b_any(15, 3) == 4781);
  CHECK(has_closed_form(9, 4));
  CHECK_FALSE(has_closed_form(9, 3));
}

TEST_CASE("closed forms agree with the oracle up to n = 24") {
  for (const auto& r : {cli::check_m_closed_vs_oracle(24, 1), cli::check_b_any_vs_oracle(24, 1),
                        cli::check_b_closed_vs_oracle(24, 1)}) {
    CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
  }
}

TEST_CASE("sum forms and integrality") {
  for (const auto& r : {cli::check_sum_eval(12), cli::check_b_double_plus_sum_form(12), cli::check_integrality(40)}) {
    CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
  }
}
