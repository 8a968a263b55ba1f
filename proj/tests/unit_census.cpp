#include <stdexcept>

#include "doctest.h"
#include "wdfa/census.hpp"

using namespace wdfa;
using doctest::Approx;

TEST_SUITE_BEGIN("census");

TEST_CASE("binomials follow the zero convention and stay exact") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(7, 0) == 1);
  CHECK(binom(7, 7) == 1);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(64, 32) == BigCount("1832624140942590534"));
  // Pascal's rule on a band where doubles would have drifted long ago
  for (int a = 60; a <= 70; ++a)
    for (int b = 1; b < a; ++b)
      CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
}

TEST_CASE("family sizes at the pinned reference points") {
  CHECK(count_O(5, 6, 2) == 210);
  CHECK(count_I(5, 6, 2) == 6);
  CHECK(count_wdfa(Params{5, 6, 2}) == 1260);
  CHECK(count_wdfa(Params{4, 4, 2}) == 136);
  CHECK(count_wdfa(Params{2, 1, 1}) == 2);
  CHECK(count_wdfa_or_zero(5, 6, 2) == 1260);
  CHECK(count_wdfa_or_zero(3, 7, 2) == 0);   // m beyond n*sigma
  CHECK(count_wdfa_or_zero(4, 2, 2) == 0);   // m below n-1
  CHECK(count_all_m(4, 1) == 7);
  CHECK(count_all_m(4, 2) == 510);
}

TEST_CASE("count_all_m is the sum of the per-m counts") {
  for (std::uint64_t n = 2; n <= 7; ++n) {
    for (std::uint64_t sigma = 1; sigma <= n - 1; ++sigma) {
      BigCount sum = 0;
      for (std::uint64_t m = n - 1; m <= n * sigma; ++m) sum += count_wdfa_or_zero(n, m, sigma);
      CHECK(count_all_m(n, sigma) == sum);
      CHECK(sum > 0);
    }
  }
}

TEST_CASE("dropping the effective-alphabet rule sums over label subsets") {
  // Two labels, three states, three edges: either label alone gives 2
  // automata, both together give 18.
  CHECK(count_wdfa(Params{3, 3, 1}) == 2);
  CHECK(count_wdfa(Params{3, 3, 2}) == 18);
  CHECK(count_wdfa_noneffective(Params{3, 3, 2}) == 2 * 2 + 18);
  // sigma may exceed n-1 here: only the subsets of usable size contribute
  CHECK(count_wdfa_noneffective(Params{2, 1, 2}) == 4);
  CHECK(count_wdfa_noneffective(Params{2, 1, 1}) == 2);
}

TEST_CASE("count preconditions name the violated constraint") {
  CHECK_THROWS_WITH_AS(count_wdfa(Params{1, 0, 1}), doctest::Contains("n must be at least 2"),
                       std::domain_error);
  CHECK_THROWS_WITH_AS(count_wdfa(Params{3, 7, 2}), doctest::Contains("m must be at most"),
                       std::domain_error);
  CHECK_THROWS_WITH_AS(count_wdfa(Params{3, 1, 2}), doctest::Contains("m must be at least"),
                       std::domain_error);
  CHECK_THROWS_AS(count_wdfa(Params{3, 3, 3}), std::domain_error);  // sigma > n-1
  CHECK_THROWS_AS(count_wdfa_noneffective(Params{1, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(count_wdfa_noneffective(Params{3, 1, 2}), std::domain_error);  // m < n-1
  CHECK_THROWS_WITH_AS(count_wdfa_noneffective(Params{3, 7, 2}),
                       doctest::Contains("every nonempty label subset"), std::domain_error);
  CHECK_THROWS_AS(count_all_m(4, 0), std::domain_error);
  CHECK_THROWS_AS(count_all_m(4, 4), std::domain_error);
  CHECK_THROWS_AS(count_all_m(1, 1), std::domain_error);
}

TEST_CASE("log2 of exact counts") {
  CHECK(log2_count(BigCount(1)) == Approx(0.0));
  CHECK(log2_count(BigCount(1024)) == Approx(10.0));
  CHECK(log2_count(BigCount(3)) == Approx(1.5849625007));
  BigCount big = 1;
  big <<= 100;
  CHECK(log2_count(big) == Approx(100.0));
  CHECK(log2_count(big + 1) == Approx(100.0));
  CHECK(log2_count((big + 1) * 3) == Approx(101.5849625007));
}

TEST_CASE("bit-size bounds at the worked point") {
  const Bounds b = bounds(8, 2, 0.5);
  CHECK(b.lower == Approx(13.0));
  CHECK(b.upper == Approx(34.724602).epsilon(1e-5));
  const double x = log2_count(count_all_m(8, 2));
  CHECK(x == Approx(21.044).epsilon(1e-3));
  CHECK(b.lower <= x);
  CHECK(x <= b.upper);
}

TEST_CASE("bounds sandwich the exact bit size across a small grid") {
  for (std::uint64_t n = 4; n <= 10; ++n) {
    for (std::uint64_t sigma = 1; sigma <= n / 2; ++sigma) {
      const Bounds b = bounds(n, sigma, 0.5);
      const double x = log2_count(count_all_m(n, sigma));
      CHECK_MESSAGE(b.lower <= x, "n=", n, " sigma=", sigma);
      CHECK_MESSAGE(x <= b.upper, "n=", n, " sigma=", sigma);
    }
  }
}

TEST_CASE("bounds preconditions") {
  CHECK_THROWS_AS(bounds(8, 2, 0.0), std::domain_error);    // eps out of (0, 1/2]
  CHECK_THROWS_AS(bounds(8, 2, 0.6), std::domain_error);
  CHECK_THROWS_AS(bounds(8, 5, 0.5), std::domain_error);    // sigma > (1-eps)*n
  CHECK_THROWS_AS(bounds(3, 1, 0.5), std::domain_error);    // n < 2/eps
  CHECK_THROWS_AS(bounds(8, 0, 0.5), std::domain_error);
  CHECK_NOTHROW(bounds(8, 4, 0.5));                         // boundary: sigma = (1-eps)*n
  CHECK_NOTHROW(bounds(4, 2, 0.5));                         // boundary: n = 2/eps
}

TEST_CASE("a larger family computes without overflow") {
  const BigCount c = count_wdfa(Params{100, 500, 50});
  CHECK(c > 0);
  CHECK(log2_count(c) > 500.0);  // comfortably beyond any built-in width
}

TEST_SUITE_END();
