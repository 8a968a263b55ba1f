#include "wdfa/stream.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wdfa {

std::pair<std::uint64_t, std::uint64_t> map_t(std::uint64_t t, const Params& p) {
  if (t < 1 || t > p.n * p.sigma)
    throw std::out_of_range("map_t: t = " + std::to_string(t) + " outside 1..n*sigma");
  return {(t - 1) % p.n + 1, (t - 1) / p.n + 1};
}

std::uint64_t default_attempt_cap(std::uint64_t m) {
  return static_cast<std::uint64_t>(64.0 * std::log(static_cast<double>(m)) + 64.0);
}

StreamStats sample_stream(const Params& p, const SourceFactory& make_source, Sink& sink,
                          const StreamOptions& opts) {
  require_valid(p);
  const std::uint64_t n = p.n;
  const std::uint64_t cells = p.n * p.sigma;
  const std::uint64_t wild_universe = p.m - p.sigma;   // free in-vector positions
  const std::uint64_t wild_take = p.n - p.sigma - 1;   // how many carry a 1
  const std::uint64_t sentinel = wild_universe + 1;    // matches no live rank
  const std::uint64_t cap = opts.max_attempts ? opts.max_attempts : default_attempt_cap(p.m);

  StreamStats stats;
  for (stats.attempts = 1; stats.attempts <= cap; ++stats.attempts) {
    auto cell_src = make_source(cells, p.m);
    auto wild_src = make_source(wild_universe, wild_take);
    std::uint64_t next_one = wild_src->empty() ? sentinel : wild_src->pop();
    std::uint64_t rank = 1;  // rank of the current cell among the free positions
    std::uint64_t dest = 1;
    std::uint64_t prev_col = 0;
    std::uint64_t emitted = 0;
    bool rejected = false;
    while (!cell_src->empty()) {
      const std::uint64_t t = cell_src->pop();
      const std::uint64_t row = (t - 1) % n + 1;
      const std::uint64_t col = (t - 1) / n + 1;
      if (col > prev_col + 1) {  // a whole label column was skipped
        rejected = true;
        break;
      }
      if (col == prev_col + 1) {  // block start: forced 1-bit
        ++dest;
        prev_col = col;
      } else {
        if (rank == next_one) {  // free position that drew a 1-bit
          ++dest;
          next_one = wild_src->empty() ? sentinel : wild_src->pop();
        }
        ++rank;
      }
      sink.emit({row, col, dest});
      ++emitted;
    }
    if (!rejected && prev_col == p.sigma) {
      sink.commit();
      stats.edges = emitted;
      return stats;
    }
    sink.restart();
  }
  throw std::runtime_error("sample_stream: no accepted attempt within " + std::to_string(cap) +
                           " tries; sigma is likely too close to the m/ln(m) boundary");
}

StreamStats sample_stream(const Params& p, Rng& rng, Sink& sink, const StreamOptions& opts) {
  StreamStats stats = sample_stream(p, rng_source_factory(rng), sink, opts);
  stats.seed = rng.seed();
  return stats;
}

}  // namespace wdfa
