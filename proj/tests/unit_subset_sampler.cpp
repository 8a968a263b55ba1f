#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wdfa/oracle.hpp"
#include "wdfa/random.hpp"
#include "wdfa/subset_sampler.hpp"

using namespace wdfa;

namespace {

std::vector<std::uint64_t> drain(SubsetSource& s) {
  std::vector<std::uint64_t> out;
  while (!s.empty()) out.push_back(s.pop());
  return out;
}

// chi-square of draw frequencies over all C(N,k) subsets against uniform
double subset_chi2(std::uint64_t universe, std::uint64_t take, std::uint64_t draws,
                   std::uint64_t seed, bool use_reference, std::uint64_t* categories) {
  Rng rng(seed);
  std::map<std::vector<std::uint64_t>, std::uint64_t> freq;
  for (std::uint64_t i = 0; i < draws; ++i) {
    if (use_reference) {
      ++freq[reference_subset_sample(universe, take, rng)];
    } else {
      SequentialSubsetSampler s(universe, take, rng);
      ++freq[drain(s)];
    }
  }
  // C(N,k) categories; every subset should have shown up at these volumes
  std::uint64_t cats = 1;
  for (std::uint64_t i = 0; i < take; ++i) cats = cats * (universe - i) / (i + 1);
  *categories = cats;
  const double expected = static_cast<double>(draws) / static_cast<double>(cats);
  double stat = 0;
  std::uint64_t seen = 0;
  for (const auto& [subset, count] : freq) {
    const double diff = static_cast<double>(count) - expected;
    stat += diff * diff / expected;
    ++seen;
  }
  stat += static_cast<double>(cats - seen) * expected;  // never-seen subsets
  return stat;
}

}  // namespace

TEST_SUITE_BEGIN("subset_sampler");

TEST_CASE("hard invariants: ascending, cardinality, range") {
  Rng rng(42);
  for (std::uint64_t universe : {0ull, 1ull, 2ull, 7ull, 19ull, 64ull, 1000ull}) {
    for (std::uint64_t take = 0; take <= universe; take += (universe > 8 ? 7 : 1)) {
      SequentialSubsetSampler s(universe, take, rng);
      const auto got = drain(s);
      REQUIRE(got.size() == take);
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i] >= 1);
        CHECK(got[i] <= universe);
        if (i > 0) CHECK(got[i] > got[i - 1]);
      }
    }
  }
}

TEST_CASE("degenerate sizes") {
  Rng rng(7);
  SequentialSubsetSampler none(7, 0, rng);
  CHECK(none.empty());
  CHECK_THROWS_AS(none.pop(), std::out_of_range);

  SequentialSubsetSampler all(5, 5, rng);
  CHECK(drain(all) == std::vector<std::uint64_t>{1, 2, 3, 4, 5});

  SequentialSubsetSampler one(1, 1, rng);
  CHECK(drain(one) == std::vector<std::uint64_t>{1});

  CHECK_THROWS_AS(SequentialSubsetSampler(3, 4, rng), std::invalid_argument);
  CHECK_THROWS_AS(reference_subset_sample(3, 4, rng), std::invalid_argument);
}

TEST_CASE("same seed, same subsets; the stream is deterministic") {
  Rng a(123456), b(123456);
  for (int i = 0; i < 50; ++i) {
    SequentialSubsetSampler sa(97, 13, a);
    SequentialSubsetSampler sb(97, 13, b);
    CHECK(drain(sa) == drain(sb));
  }
  Rng c(123457);
  SequentialSubsetSampler sa(97, 13, a);
  SequentialSubsetSampler sc(97, 13, c);
  CHECK(drain(sa) != drain(sc));  // one suffix collision would be astonishing
}

TEST_CASE("a seed reproduces the worked trace 2 5 6 8 9 10") {
  const std::vector<std::uint64_t> want{2, 5, 6, 8, 9, 10};
  std::int64_t found = -1;
  for (std::uint64_t seed = 0; seed < 200000 && found < 0; ++seed) {
    Rng rng(seed);
    SequentialSubsetSampler s(10, 6, rng);
    if (drain(s) == want) found = static_cast<std::int64_t>(seed);
  }
  REQUIRE(found >= 0);
  // and the reference sampler can reproduce it too
  std::int64_t found_ref = -1;
  for (std::uint64_t seed = 0; seed < 200000 && found_ref < 0; ++seed) {
    Rng rng(seed);
    if (reference_subset_sample(10, 6, rng) == want) found_ref = static_cast<std::int64_t>(seed);
  }
  REQUIRE(found_ref >= 0);
}

TEST_CASE("per-element inclusion frequency matches the k/N marginal") {
  // N=12, k=4: every element is included with probability 1/3.
  Rng rng(2024);
  const std::uint64_t draws = 30000;
  std::vector<std::uint64_t> hits(13, 0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    SequentialSubsetSampler s(12, 4, rng);
    while (!s.empty()) ++hits[s.pop()];
  }
  const double expect = draws / 3.0;
  const double tol = 4.0 * std::sqrt(draws * (1.0 / 3.0) * (2.0 / 3.0));  // 4 sigma
  for (std::uint64_t v = 1; v <= 12; ++v)
    CHECK(std::abs(static_cast<double>(hits[v]) - expect) < tol);
}

TEST_CASE("exchangeability: both samplers are uniform over all C(N,k) subsets") {
  for (auto [universe, take, draws] :
       {std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>{8, 3, 56000},
        {6, 2, 30000},
        {7, 6, 14000},
        {5, 4, 10000}}) {
    std::uint64_t cats = 0;
    for (bool use_reference : {false, true}) {
      double stat = subset_chi2(universe, take, draws, 99991, use_reference, &cats);
      double threshold = chi_square_quantile_999(cats - 1);
      if (stat > threshold)  // one fresh-seed retry keeps the flake rate ~1e-6
        stat = subset_chi2(universe, take, draws, 99992, use_reference, &cats);
      CHECK_MESSAGE(stat <= threshold, "N=", universe, " k=", take,
                    " reference=", use_reference, " chi2=", stat, " thr=", threshold);
    }
  }
}

TEST_CASE("scripted source replays verbatim and throws past the end") {
  ScriptedSubsetSource s({2, 5, 6, 8, 9, 10});
  CHECK(drain(s) == std::vector<std::uint64_t>{2, 5, 6, 8, 9, 10});
  CHECK_THROWS_AS(s.pop(), std::out_of_range);
}

TEST_CASE("script book hands out scripts per (universe, take) key in order") {
  ScriptBook book;
  book.add(10, 6, {1, 2, 3, 4, 5, 6});
  book.add(10, 6, {5, 6, 7, 8, 9, 10});
  book.add(4, 2, {2, 4});
  const SourceFactory factory = book.factory();
  CHECK(drain(*factory(10, 6)) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(drain(*factory(4, 2)) == std::vector<std::uint64_t>{2, 4});
  CHECK(drain(*factory(10, 6)) == std::vector<std::uint64_t>{5, 6, 7, 8, 9, 10});
  CHECK_THROWS_AS(factory(10, 6), std::out_of_range);
  CHECK_THROWS_AS(factory(3, 1), std::out_of_range);
}

TEST_CASE("rng_source_factory draws fresh samplers off one stream") {
  Rng rng(31337);
  const SourceFactory factory = rng_source_factory(rng);
  const auto a = drain(*factory(40, 5));
  const auto b = drain(*factory(40, 5));
  CHECK(a.size() == 5);
  CHECK(b.size() == 5);
  // replaying the seed replays both draws
  Rng rng2(31337);
  const SourceFactory factory2 = rng_source_factory(rng2);
  CHECK(drain(*factory2(40, 5)) == a);
  CHECK(drain(*factory2(40, 5)) == b);
}

TEST_SUITE_END();
