#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "wdfa/automaton.hpp"

namespace wdfa {

using BigCount = boost::multiprecision::cpp_int;

// Binomial coefficient with the zero convention: 0 when a < 0, b < 0 or
// b > a. Exact.
BigCount binom(std::int64_t a, std::int64_t b);

// Number of out-matrices: m set cells among n*sigma with no empty label
// column, by inclusion-exclusion over the excluded columns. Total in its
// arguments (returns 0 for infeasible shapes).
BigCount count_O(std::uint64_t n, std::uint64_t m, std::uint64_t sigma);

// Number of in-vectors compatible with any fixed out-matrix:
// C(m-sigma, n-sigma-1). Total.
BigCount count_I(std::uint64_t n, std::uint64_t m, std::uint64_t sigma);

// |D_{n,m,sigma}| = count_O * count_I, 0 when the family is empty. Total.
BigCount count_wdfa_or_zero(std::uint64_t n, std::uint64_t m, std::uint64_t sigma);

// Same, but the parameters must name a nonempty family: throws
// std::domain_error (naming the violated constraint) otherwise.
BigCount count_wdfa(const Params& p);

// Family size without the effective-alphabet requirement: automata over
// alphabet {1..sigma} that use any nonempty subset of the labels. Requires
// n >= 2, sigma >= 1 and m >= n-1; throws std::domain_error when violated
// or when no label subset yields a nonempty family.
BigCount count_wdfa_noneffective(const Params& p);

// Sum of |D_{n,m,sigma}| over every feasible m (n-1 .. n*sigma).
// Requires n >= 2 and 1 <= sigma <= n-1.
BigCount count_all_m(std::uint64_t n, std::uint64_t sigma);

// log2 of a positive count, accurate to well past 50 bits.
double log2_count(const BigCount& x);

// Worst-case bit-size bounds for log2(count_all_m(n, sigma)).
//   lower = n*sigma + (n-sigma)*log2(sigma) - (n + log2(sigma))
//   upper = n*sigma + (n-sigma)*log2(e*sigma*n / (n-sigma-1))
// Requires eps in (0, 1/2], sigma >= 1, sigma <= (1-eps)*n, n >= 2/eps;
// throws std::domain_error otherwise.
struct Bounds {
  double lower = 0;
  double upper = 0;
};
Bounds bounds(std::uint64_t n, std::uint64_t sigma, double eps);

}  // namespace wdfa
