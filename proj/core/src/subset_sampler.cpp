#include "wdfa/subset_sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wdfa {

SequentialSubsetSampler::SequentialSubsetSampler(std::uint64_t universe, std::uint64_t take,
                                                 Rng& rng)
    : rng_(&rng), universe_(universe), take_(take) {
  if (take > universe)
    throw std::invalid_argument("subset sampler: take " + std::to_string(take) +
                                " exceeds universe " + std::to_string(universe));
  low_range_ = universe - take;
  // Phase 1: one exact Bernoulli per Floyd round.
  std::uint64_t low_draws = 0;
  for (std::uint64_t w = low_range_ + 1; w <= universe_; ++w)
    if (rng.below(w) < low_range_) ++low_draws;
  low_left_ = low_draws;
  diverted_ = take_ - low_draws;
  window_next_ = low_range_ + 1;
}

std::uint64_t SequentialSubsetSampler::pop() {
  if (empty()) throw std::out_of_range("subset sampler: pop past the end");

  // Phase 2: next distinct low-range value, collisions diverted.
  while (low_left_ > 0) {
    frontier_ *= std::pow(rng_->unit(), 1.0 / static_cast<double>(low_left_));
    --low_left_;
    auto cell = static_cast<std::uint64_t>(frontier_ * static_cast<double>(low_range_));
    if (cell >= low_range_) cell = low_range_ - 1;  // frontier_ == 1.0 corner
    const std::uint64_t value = low_range_ - cell;  // reflect: walk descends, values ascend
    if (value != last_low_) {
      last_low_ = value;
      ++emitted_;
      return value;
    }
    ++diverted_;
  }

  // Phase 3: scan the top window; remaining/slots keeps the law exact.
  for (;;) {
    const std::uint64_t slots = universe_ - window_next_ + 1;
    if (rng_->below(slots) < diverted_) {
      --diverted_;
      ++emitted_;
      return window_next_++;
    }
    ++window_next_;
  }
}

std::vector<std::uint64_t> reference_subset_sample(std::uint64_t universe, std::uint64_t take,
                                                   Rng& rng) {
  if (take > universe)
    throw std::invalid_argument("reference sampler: take exceeds universe");
  std::vector<std::uint64_t> out;
  out.reserve(take);
  std::uint64_t want = take;
  for (std::uint64_t v = 1; v <= universe && want > 0; ++v) {
    if (rng.below(universe - v + 1) < want) {
      out.push_back(v);
      --want;
    }
  }
  return out;
}

std::uint64_t ScriptedSubsetSource::pop() {
  if (empty()) throw std::out_of_range("scripted source: pop past the end");
  return script_[next_++];
}

SourceFactory rng_source_factory(Rng& rng) {
  return [&rng](std::uint64_t universe, std::uint64_t take) -> std::unique_ptr<SubsetSource> {
    return std::make_unique<SequentialSubsetSampler>(universe, take, rng);
  };
}

void ScriptBook::add(std::uint64_t universe, std::uint64_t take,
                     std::vector<std::uint64_t> script) {
  scripts_[{universe, take}].push_back(std::move(script));
}

SourceFactory ScriptBook::factory() {
  return [this](std::uint64_t universe, std::uint64_t take) -> std::unique_ptr<SubsetSource> {
    auto it = scripts_.find({universe, take});
    if (it == scripts_.end() || it->second.empty())
      throw std::out_of_range("script book: no script queued for (" + std::to_string(universe) +
                              "," + std::to_string(take) + ")");
    auto src = std::make_unique<ScriptedSubsetSource>(std::move(it->second.front()));
    it->second.pop_front();
    return src;
  };
}

}  // namespace wdfa
