#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wdfa/automaton.hpp"
#include "wdfa/subset_sampler.hpp"

namespace wdfa {

// Explicit bit sequence; logical position i (1-based in the operations
// below) lives at [i-1].
using BitVec = std::vector<bool>;

// Out-degree matrix: n*sigma bits, flat in column-major (label-major)
// order, cell (u, j) at flat index (j-1)*n + (u-1). Row u holds the labels
// on which state u has an outgoing transition. The matrix/vector codec is
// explicit-storage machinery and refuses n*sigma > 2^32 cells; the
// streaming generator has no such bound.
struct OutMatrix {
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  BitVec bits;

  bool get(std::uint64_t u, std::uint64_t j) const { return bits[(j - 1) * n + (u - 1)]; }
  void set(std::uint64_t u, std::uint64_t j, bool b) { bits[(j - 1) * n + (u - 1)] = b; }

  std::uint64_t ones() const;                       // ||O|| = m
  std::uint64_t column_ones(std::uint64_t j) const; // ||O_j||

  friend bool operator==(const OutMatrix&, const OutMatrix&) = default;
};

// Number of set bits among the first i positions, 0 <= i <= |v|.
// Throws std::out_of_range beyond the end.
std::uint64_t rank_vec(const BitVec& v, std::uint64_t i);

// Rank of cell (u, j) in column-major order: every column before j in
// full, plus column j down to row u.
std::uint64_t rank_mat(const OutMatrix& o, std::uint64_t u, std::uint64_t j);

// In-vector shape forced by O: '1' at each label block's first position,
// '#' (free) elsewhere; length ||O||. Every column of O must be nonzero.
std::string in_mask(const OutMatrix& o);

// Substitutes wildcard_bits for the '#' positions of mask, left to right.
// Throws std::invalid_argument when the counts disagree or the mask holds
// anything besides '1' and '#'.
BitVec fill(std::string_view mask, const BitVec& wildcard_bits);

// Uniform out-matrix: rejection over m-subsets of the n*sigma cells until
// no label column is empty. Loops until a draw is accepted; with m-subset
// draws from make_source the expected number of iterations is the family's
// rejection constant.
OutMatrix sample_O(const Params& p, const SourceFactory& make_source);

// Uniform compatible in-vector for O: the free positions that receive
// 1-bits form a uniform (n-sigma-1)-subset of the m-sigma wildcard ranks.
BitVec sample_I(const OutMatrix& o, const SourceFactory& make_source);

// d -> (O, I). Requires check_wheeler(d).ok; throws std::invalid_argument
// otherwise. I lists, per state 2..n in order, a 1-bit followed by
// in-degree-1 zero bits.
std::pair<OutMatrix, BitVec> encode(const WheelerDfa& d);

// (O, I) -> d. Requires a compatible pair: |I| = ||O||, ||I|| = n-1, no
// empty column, the forced block-start bits set; throws
// std::invalid_argument otherwise. The result always passes check_wheeler,
// with transitions already canonical: the cell of rank i maps to dest
// rank_vec(I, i) + 1.
WheelerDfa decode(const OutMatrix& o, const BitVec& in_vec);

}  // namespace wdfa
