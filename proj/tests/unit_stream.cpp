#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "wdfa/census.hpp"
#include "wdfa/codec.hpp"
#include "wdfa/random.hpp"
#include "wdfa/stream.hpp"

using namespace wdfa;
using test::bits;
using test::running_example;

namespace {

// all k-subsets of {1..universe}, ascending within and lexicographic across
std::vector<std::vector<std::uint64_t>> combinations(std::uint64_t universe, std::uint64_t take) {
  std::vector<std::vector<std::uint64_t>> all;
  std::vector<std::uint64_t> idx(take);
  for (std::uint64_t i = 0; i < take; ++i) idx[i] = i + 1;
  for (;;) {
    all.push_back(idx);
    std::uint64_t i = take;
    while (i > 0 && idx[i - 1] == universe - take + i) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::uint64_t j = i; j < take; ++j) idx[j] = idx[j - 1] + 1;
  }
  return all;
}

OutMatrix matrix_of(const Params& p, const std::vector<std::uint64_t>& cells) {
  OutMatrix o{p.n, p.sigma, BitVec(p.n * p.sigma, false)};
  for (const std::uint64_t t : cells) o.bits[t - 1] = true;
  return o;
}

bool covers_all_columns(const Params& p, const std::vector<std::uint64_t>& cells) {
  const OutMatrix o = matrix_of(p, cells);
  for (std::uint64_t j = 1; j <= p.sigma; ++j)
    if (o.column_ones(j) == 0) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("stream");

TEST_CASE("map_t unfolds the column-major cell index") {
  const Params p{5, 6, 2};
  CHECK(map_t(1, p) == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(map_t(2, p) == std::pair<std::uint64_t, std::uint64_t>{2, 1});
  CHECK(map_t(6, p) == std::pair<std::uint64_t, std::uint64_t>{1, 2});
  CHECK(map_t(10, p) == std::pair<std::uint64_t, std::uint64_t>{5, 2});
  CHECK_THROWS_AS(map_t(0, p), std::out_of_range);
  CHECK_THROWS_AS(map_t(11, p), std::out_of_range);
}

TEST_CASE("attempt cap and restart feasibility") {
  CHECK(default_attempt_cap(1) == 64);
  CHECK(default_attempt_cap(61) == 327);
  CHECK(restarts_possible(Params{3, 2, 2}));
  CHECK(restarts_possible(Params{32, 61, 16}));
  CHECK_FALSE(restarts_possible(Params{5, 6, 2}));  // m > n*(sigma-1): every draw covers
}

TEST_CASE("scripted pops reproduce the five-state example in one attempt") {
  const Params p{5, 6, 2};
  ScriptBook book;
  book.add(10, 6, {2, 5, 6, 8, 9, 10});
  book.add(4, 2, {2, 4});
  VectorSink sink;
  const StreamStats stats = sample_stream(p, book.factory(), sink);
  CHECK(stats.attempts == 1);
  CHECK(stats.edges == 6);
  CHECK(stats.seed == 0);
  CHECK(WheelerDfa{p.n, p.sigma, sink.edges()} == running_example());
}

TEST_CASE("a draw that skips a label column restarts and redraws") {
  const Params p{3, 2, 2};
  ScriptBook book;
  book.add(6, 2, {1, 2});  // both cells under label 1: column 2 never opens
  book.add(6, 2, {1, 4});
  book.add(0, 0, {});
  book.add(0, 0, {});
  VectorSink sink;
  const StreamStats stats = sample_stream(p, book.factory(), sink);
  CHECK(stats.attempts == 2);
  CHECK(stats.edges == 2);
  CHECK(sink.edges() == std::vector<Transition>{{1, 1, 2}, {1, 2, 3}});
}

TEST_CASE("the attempt cap turns persistent rejection into an error") {
  const Params p{3, 2, 2};
  ScriptBook book;
  book.add(6, 2, {1, 2});
  book.add(0, 0, {});
  NullSink sink;
  CHECK_THROWS_WITH_AS(sample_stream(p, book.factory(), sink, StreamOptions{1}),
                       doctest::Contains("no accepted attempt"), std::runtime_error);
}

TEST_CASE("stream and decode agree on every scripted draw of small families") {
  std::uint64_t families = 0, members = 0;
  for (std::uint64_t n = 2; n <= 4; ++n) {
    for (std::uint64_t sigma = 1; sigma <= 2 && sigma <= n - 1; ++sigma) {
      for (std::uint64_t m = n - 1; m <= n * sigma; ++m) {
        const Params p{n, m, sigma};
        ++families;
        std::uint64_t pairs = 0;
        for (const auto& cells : combinations(n * sigma, m)) {
          if (!covers_all_columns(p, cells)) continue;
          const OutMatrix o = matrix_of(p, cells);
          for (const auto& wild : combinations(m - sigma, n - sigma - 1)) {
            ++pairs;
            ScriptBook book;
            book.add(n * sigma, m, cells);
            book.add(m - sigma, n - sigma - 1, wild);
            VectorSink sink;
            const StreamStats stats = sample_stream(p, book.factory(), sink);
            REQUIRE(stats.attempts == 1);
            const WheelerDfa streamed{n, sigma, sink.edges()};

            BitVec wild_bits(m - sigma, false);
            for (const std::uint64_t w : wild) wild_bits[w - 1] = true;
            const WheelerDfa decoded = decode(o, fill(in_mask(o), wild_bits));
            REQUIRE(streamed == decoded);
            REQUIRE(check_wheeler(streamed).ok);
            REQUIRE(streamed.transitions.back().dest == n);
          }
        }
        // the scripted sweep visited the whole family, one pair per member
        CHECK(pairs == count_wdfa(p).convert_to<std::uint64_t>());
        members += pairs;
      }
    }
  }
  CHECK(families == 17);
  CHECK(members > 400);  // the sweep is not vacuous
}

TEST_CASE("rng-driven draws satisfy the structural contract") {
  Rng rng(8086);
  for (const Params p : {Params{5, 6, 2}, Params{4, 4, 2}, Params{6, 12, 3},
                         Params{32, 61, 16}, Params{2, 1, 1}}) {
    for (int i = 0; i < 25; ++i) {
      VectorSink sink;
      const StreamStats stats = sample_stream(p, rng, sink);
      CHECK(stats.attempts >= 1);
      CHECK(stats.edges == p.m);
      CHECK(stats.seed == 8086);
      const WheelerDfa d{p.n, p.sigma, sink.edges()};
      REQUIRE(d.transitions.size() == p.m);
      CHECK(check_wheeler(d).ok);
      CHECK(d.transitions.back().dest == p.n);
      for (std::size_t k = 1; k < d.transitions.size(); ++k)
        CHECK(canonical_less(d.transitions[k - 1], d.transitions[k]));
    }
  }
}

TEST_CASE("the same seed streams the same automaton") {
  const Params p{12, 30, 5};
  VectorSink a, b;
  Rng ra(424242), rb(424242);
  const StreamStats sa = sample_stream(p, ra, a);
  const StreamStats sb = sample_stream(p, rb, b);
  CHECK(sa.attempts == sb.attempts);
  CHECK(a.edges() == b.edges());
}

TEST_SUITE_END();
