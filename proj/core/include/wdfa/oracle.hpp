#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wdfa/automaton.hpp"
#include "wdfa/random.hpp"

namespace wdfa {

// Streams every member of D_{n,m,sigma} through fn: all m-subsets of the
// n*sigma cells with no empty column, crossed with all (n-sigma-1)-subsets
// of the wildcard ranks, decoded. Deterministic lexicographic order.
// Tractability guard n*sigma <= 24 (std::invalid_argument beyond); empty
// families throw std::domain_error.
void for_each_wdfa(const Params& p, const std::function<void(const WheelerDfa&)>& fn);

// Convenience: the family as a vector.
std::vector<WheelerDfa> enumerate_via_r(const Params& p);

// Independent ground truth that never touches the codec: every m-edge
// candidate function [n] x [sigma] -> [n] is generated and filtered through
// check_wheeler. Deliberately brute force; guard n <= 4, sigma <= 2,
// m <= 6.
std::vector<WheelerDfa> enumerate_direct(const Params& p);

struct ChiSquareReport {
  std::uint64_t categories = 0;
  std::uint64_t draws = 0;
  double statistic = 0;
  double threshold = 0;  // 0.999 quantile at categories-1 dof
  bool pass = false;
};

// 0.999 chi-square quantile via the Wilson-Hilferty cube approximation;
// its error is a fraction of a percent, far inside the decision margin.
double chi_square_quantile_999(std::uint64_t dof);

// Draws `draws` automata from `draw`, bins them against the enumerated
// family and compares the chi-square statistic with the 0.999 quantile.
// Requires draws >= 100 * family size; a draw outside the family throws
// std::runtime_error.
ChiSquareReport uniformity_test(const std::function<WheelerDfa()>& draw, const Params& p,
                                std::uint64_t draws);

struct RejectionStats {
  std::uint64_t runs = 0;
  double mean_attempts = 0;
  std::uint64_t max_attempts = 0;
};

// Runs the streaming generator `runs` times against a counting sink and
// aggregates the attempt counts.
RejectionStats rejection_stats(const Params& p, std::uint64_t runs, Rng& rng);

}  // namespace wdfa
