#include <doctest.h>

#include <cmath>
#include <sstream>

#include "binpack/bounds.hpp"
#include "binpack/cli/verify.hpp"
#include "binpack/generalized.hpp"

using namespace binpack;

TEST_CASE("alpha and beta") {
  CHECK(alpha_beta(10, 3, 4) == AlphaBeta{1, 2});
  for (int l = 1; l <= 6; ++l) {
    for (int k = 2; k <= 6; ++k) {
      CHECK(alpha_beta(l, l, k) == AlphaBeta{0, 0});
    }
  }
  CHECK(alpha_beta(2, 5, 3) == AlphaBeta{-1, -1});
  const auto r = cli::check_alpha_beta(30);
  CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("Stirling interval") {
  const StirlingInterval five = stirling_bounds(5);
  CHECK(five.lower <= 120.0);
  CHECK(120.0 <= five.upper);
  const StirlingInterval one = stirling_bounds(1);
  CHECK(one.lower <= 1.0);
  CHECK(1.0 <= one.upper);

  const double twenty = 2432902008176640000.0;
  const StirlingInterval s = stirling_bounds(20);
  CHECK(s.lower <= twenty);
  CHECK(twenty <= s.upper);
  CHECK((s.upper - s.lower) / twenty < 0.01);

  const auto r = cli::check_stirling(170);
  CHECK_MESSAGE(r.passed, r.detail);
  CHECK_THROWS_AS(stirling_bounds(0), DomainError);
}

TEST_CASE("log-space reals") {
  const LogReal a = LogReal::from_count(1000);
  CHECK(a.sign() == 1);
  CHECK(a.to_double() == doctest::Approx(1000.0));
  CHECK(a.to_scientific() == "1.000000000e+3");
  CHECK((-a).to_scientific(3) == "-1.00e+3");
  CHECK(LogReal::zero().to_scientific() == "0");
  CHECK(-a <= a);
  CHECK(LogReal::zero() <= a);

  const LogReal huge = LogReal::from_count(pow2(5000));
  CHECK(huge.finite());
  CHECK(huge.log_abs() == doctest::Approx(5000 * std::log(2.0)));
  CHECK(huge.to_scientific(4) == "1.412e+1505");

  const LogReal terms[] = {a, -a, LogReal::from_count(5)};
  CHECK(log_sum(terms).to_double() == doctest::Approx(5.0));
}

TEST_CASE("envelope at sample points") {
  const ContainmentRow row = containment_point(12, 4, 4);
  CHECK(row.exact == m_formula_two(12, 4, 4));
  CHECK(row.interval.finite());
  CHECK(row.interval.lower <= row.interval.upper);
  if (row.interval.exact_applicable) {
    CHECK(row.contained);
  }
  CHECK(containment_point(2, 2, 1).exact == 1);
  CHECK(containment_point(8, 4, 2).exact == 1);
  CHECK(containment_point(20, 5, 5).exact == 120);
}

TEST_CASE("envelope hypotheses") {
  CHECK_THROWS_AS(m_envelope(2, 5, 3), DomainError);
  CHECK_THROWS_AS(m_envelope(1, 1, 1), DomainError);
  CHECK_THROWS_AS(m_envelope(9, 2, 4), DomainError);
}

TEST_CASE("envelope sweep stays finite") {
  const cli::EnvelopeSweep sweep = cli::sweep_envelope(40, 1);
  CHECK(sweep.numerical_errors == 0);
  CHECK(sweep.ordered_violations == 0);
  CHECK(sweep.applicable > 0);

  std::ostringstream csv;
  write_containment_csv(csv, sweep.rows);
  CHECK(csv.str().rfind("n,l,k,lower,exact,upper,contained,applicable\n", 0) == 0);
}
