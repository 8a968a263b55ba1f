#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "wdfa/random.hpp"

namespace wdfa {

// Pop interface shared by every subset source. A source stands for one
// k-subset of {1..N}; pop() hands out its elements in strictly increasing
// order and throws std::out_of_range once exhausted.
class SubsetSource {
 public:
  virtual ~SubsetSource() = default;
  virtual bool empty() const = 0;
  virtual std::uint64_t pop() = 0;
};

// Uniform k-subset of {1..N}, emitted ascending, O(1) words of state,
// O(k) expected total time. N and k are only bounded by uint64.
//
// Derivation. Floyd's insertion lemma (Bentley & Floyd, CACM 9/1987) builds
// a uniform k-subset in rounds w = N-k+1 .. N: round w draws r uniform on
// {1..w} and inserts r if fresh, otherwise inserts w itself. Splitting the
// rounds by whether r lands in the low range {1..N-k} and re-drawing the
// top-window part (uniform given its size, by symmetry) turns that into
// three constant-space phases:
//
//   1. count the rounds whose draw lands low: one exact Bernoulli
//      (probability (N-k)/w) per round;
//   2. emit the distinct values of that many uniform draws from the low
//      range, sorted: descending uniform order statistics a <- a*U^(1/h)
//      reflected to ascend; a collision is not re-rolled -- it diverts one
//      insertion into the top window, exactly as Floyd's lemma does;
//   3. emit the diverted insertions: an exact remaining/slots sequential
//      scan over the top window {N-k+1..N}, which costs O(k) total because
//      the window has only k slots.
//
// Phases 1 and 3 use integer draws only; the single floating-point piece is
// the order-statistic walk in phase 2, which can misplace low values by at
// most rounding-level mass. The hard guarantees -- strict ascent,
// cardinality exactly k, range {1..N} -- hold unconditionally: the walk is
// monotone even under rounding (ties divert to phase 3) and the phase
// bookkeeping always emits k values.
class SequentialSubsetSampler : public SubsetSource {
 public:
  // Throws std::invalid_argument when take > universe.
  SequentialSubsetSampler(std::uint64_t universe, std::uint64_t take, Rng& rng);

  bool empty() const override { return emitted_ == take_; }
  std::uint64_t pop() override;

 private:
  Rng* rng_;
  std::uint64_t universe_ = 0;
  std::uint64_t take_ = 0;
  std::uint64_t low_range_ = 0;    // |{1..N-k}|
  std::uint64_t low_left_ = 0;     // phase-2 draws still to make
  std::uint64_t diverted_ = 0;     // insertions owed to the top window
  std::uint64_t window_next_ = 0;  // next unscanned top-window value
  std::uint64_t emitted_ = 0;
  std::uint64_t last_low_ = 0;     // previous phase-2 value, for collision tests
  double frontier_ = 1.0;          // running maximum of the order-statistic walk
};

// Exact linear-time reference: one inclusion draw per universe element
// (selection sampling). Uniform by construction; the test oracle for the
// sampler above.
std::vector<std::uint64_t> reference_subset_sample(std::uint64_t universe,
                                                   std::uint64_t take, Rng& rng);

// Fixed sequence replay, for traces and deterministic tests. Values are
// played back verbatim; pop() past the end throws.
class ScriptedSubsetSource : public SubsetSource {
 public:
  explicit ScriptedSubsetSource(std::vector<std::uint64_t> script)
      : script_(std::move(script)) {}

  bool empty() const override { return next_ == script_.size(); }
  std::uint64_t pop() override;

 private:
  std::vector<std::uint64_t> script_;
  std::size_t next_ = 0;
};

// Downstream modules take their randomness through a factory so that tests
// can inject scripted sequences; (universe, take) identifies which draw a
// request is for.
using SourceFactory =
    std::function<std::unique_ptr<SubsetSource>(std::uint64_t universe, std::uint64_t take)>;

// Production factory: every request gets a fresh SequentialSubsetSampler
// advancing the one shared Rng, so a single seed pins the whole run.
SourceFactory rng_source_factory(Rng& rng);

// Test factory: scripts are queued per (universe, take) key and consumed in
// order; a request with no script left throws std::out_of_range.
class ScriptBook {
 public:
  void add(std::uint64_t universe, std::uint64_t take, std::vector<std::uint64_t> script);
  SourceFactory factory();  // valid while the book is alive

 private:
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::deque<std::vector<std::uint64_t>>>
      scripts_;
};

}  // namespace wdfa
