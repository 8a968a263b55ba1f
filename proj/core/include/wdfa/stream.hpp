#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wdfa/automaton.hpp"
#include "wdfa/subset_sampler.hpp"

namespace wdfa {

// Receives transitions during generation, in canonical (label, source)
// order. restart() annuls everything emitted since the last commit/open
// (the attempt was rejected); commit() seals an accepted attempt. Sinks
// report I/O trouble by throwing; the generator lets that propagate.
class Sink {
 public:
  virtual ~Sink() = default;
  virtual void emit(const Transition& t) = 0;
  virtual void restart() = 0;
  virtual void commit() = 0;
};

// Counts only; for throughput and rejection measurements.
class NullSink : public Sink {
 public:
  void emit(const Transition&) override { ++emitted_; }
  void restart() override { emitted_ = 0; }
  void commit() override {}
  std::uint64_t emitted() const { return emitted_; }

 private:
  std::uint64_t emitted_ = 0;
};

// Buffers the current attempt in memory.
class VectorSink : public Sink {
 public:
  void emit(const Transition& t) override { edges_.push_back(t); }
  void restart() override { edges_.clear(); }
  void commit() override {}
  const std::vector<Transition>& edges() const { return edges_; }

 private:
  std::vector<Transition> edges_;
};

struct StreamStats {
  std::uint64_t attempts = 0;  // rejected attempts plus the accepted one
  std::uint64_t edges = 0;     // m on success
  std::uint64_t seed = 0;      // seed of the Rng overload; 0 for injected sources
};

struct StreamOptions {
  std::uint64_t max_attempts = 0;  // 0 = default_attempt_cap(m)
};

// Flat cell index t in {1..n*sigma} (column-major) -> (row u, column j).
// Throws std::out_of_range outside that range.
std::pair<std::uint64_t, std::uint64_t> map_t(std::uint64_t t, const Params& p);

// Safety valve for degenerate corners where sigma sits near the m/ln m
// boundary and rejections stop being rare.
std::uint64_t default_attempt_cap(std::uint64_t m);

// Restarts can happen at all iff some m-subset of the cells leaves a label
// column empty.
inline bool restarts_possible(const Params& p) { return p.m <= p.n * (p.sigma - 1); }

// One uniform draw from D_{n,m,sigma}, streamed straight into sink with
// O(1) working space. Per attempt the cell subset (n*sigma choose m) and
// the free in-vector bits (an (n-sigma-1)-subset of the m-sigma wildcard
// ranks) are popped in lockstep: walking cells in column-major order, a
// block-start cell bumps the dest (its in-vector bit is forced), any other
// cell bumps it exactly when its wildcard rank was drawn. A skipped column
// rejects the attempt the moment it becomes visible, as does a final
// column count below sigma; the sink is told to restart and the next
// attempt draws fresh sources from the same factory.
//
// The attempt loop performs no allocation proportional to n, m or sigma.
// Throws std::runtime_error when max_attempts rejections pile up.
StreamStats sample_stream(const Params& p, const SourceFactory& make_source, Sink& sink,
                          const StreamOptions& opts = {});

// Convenience overload: production sources from rng, seed echoed in stats.
StreamStats sample_stream(const Params& p, Rng& rng, Sink& sink,
                          const StreamOptions& opts = {});

}  // namespace wdfa
