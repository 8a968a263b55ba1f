#include "wdfa/oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "wdfa/codec.hpp"
#include "wdfa/stream.hpp"

namespace wdfa {

namespace {

// Walks every k-subset of {1..universe} as an index vector (ascending),
// lexicographically.
class SubsetOdometer {
 public:
  SubsetOdometer(std::uint64_t universe, std::uint64_t take)
      : universe_(universe), idx_(take) {
    for (std::uint64_t i = 0; i < take; ++i) idx_[i] = i + 1;
    done_ = take > universe;
  }

  bool done() const { return done_; }
  const std::vector<std::uint64_t>& current() const { return idx_; }

  void advance() {
    if (idx_.empty()) {  // single empty subset
      done_ = true;
      return;
    }
    std::size_t i = idx_.size();
    while (i > 0) {
      --i;
      if (idx_[i] < universe_ - (idx_.size() - 1 - i)) {
        ++idx_[i];
        for (std::size_t j = i + 1; j < idx_.size(); ++j) idx_[j] = idx_[j - 1] + 1;
        return;
      }
    }
    done_ = true;
  }

 private:
  std::uint64_t universe_;
  std::vector<std::uint64_t> idx_;
  bool done_ = false;
};

std::string family_key(const WheelerDfa& d) {
  std::string key;
  key.reserve(d.transitions.size() * 12);
  for (const Transition& t : d.transitions) {
    key += std::to_string(t.source);
    key += ',';
    key += std::to_string(t.label);
    key += ',';
    key += std::to_string(t.dest);
    key += ';';
  }
  return key;
}

}  // namespace

void for_each_wdfa(const Params& p, const std::function<void(const WheelerDfa&)>& fn) {
  require_valid(p);
  if (p.n * p.sigma > 24)
    throw std::invalid_argument("for_each_wdfa: n*sigma > 24 is not tractable here");

  const std::uint64_t cells = p.n * p.sigma;
  for (SubsetOdometer cell_sets(cells, p.m); !cell_sets.done(); cell_sets.advance()) {
    OutMatrix o{p.n, p.sigma, BitVec(cells, false)};
    for (std::uint64_t t : cell_sets.current()) o.bits[t - 1] = true;
    bool covered = true;
    for (std::uint64_t j = 1; j <= p.sigma && covered; ++j) covered = o.column_ones(j) != 0;
    if (!covered) continue;

    const std::string mask = in_mask(o);
    for (SubsetOdometer wild_sets(p.m - p.sigma, p.n - p.sigma - 1); !wild_sets.done();
         wild_sets.advance()) {
      BitVec wild(p.m - p.sigma, false);
      for (std::uint64_t r : wild_sets.current()) wild[r - 1] = true;
      fn(decode(o, fill(mask, wild)));
    }
  }
}

std::vector<WheelerDfa> enumerate_via_r(const Params& p) {
  std::vector<WheelerDfa> out;
  for_each_wdfa(p, [&out](const WheelerDfa& d) { out.push_back(d); });
  return out;
}

std::vector<WheelerDfa> enumerate_direct(const Params& p) {
  require_valid(p);
  if (p.n > 4 || p.sigma > 2 || p.m > 6)
    throw std::invalid_argument("enumerate_direct: guard is n <= 4, sigma <= 2, m <= 6");

  // All (source, label) pairs in canonical order; supports are m-subsets.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> all_pairs;
  for (std::uint64_t label = 1; label <= p.sigma; ++label)
    for (std::uint64_t source = 1; source <= p.n; ++source)
      all_pairs.emplace_back(source, label);

  std::vector<WheelerDfa> out;
  for (SubsetOdometer support(all_pairs.size(), p.m); !support.done(); support.advance()) {
    // Every dest assignment: an m-digit counter in base n.
    std::vector<std::uint64_t> dest(p.m, 1);
    for (;;) {
      WheelerDfa d{p.n, p.sigma, {}};
      d.transitions.reserve(p.m);
      for (std::uint64_t i = 0; i < p.m; ++i) {
        const auto& [source, label] = all_pairs[support.current()[i] - 1];
        d.transitions.push_back({source, label, dest[i]});
      }
      if (check_wheeler(d).ok) out.push_back(std::move(d));

      std::size_t digit = 0;
      while (digit < dest.size() && dest[digit] == p.n) dest[digit++] = 1;
      if (digit == dest.size()) break;
      ++dest[digit];
    }
  }
  return out;
}

double chi_square_quantile_999(std::uint64_t dof) {
  if (dof == 0) throw std::domain_error("chi_square_quantile_999: dof must be positive");
  constexpr double z999 = 3.0902323061678132;  // standard normal 0.999 quantile
  const auto d = static_cast<double>(dof);
  const double t = 2.0 / (9.0 * d);
  const double core = 1.0 - t + z999 * std::sqrt(t);
  return d * core * core * core;
}

ChiSquareReport uniformity_test(const std::function<WheelerDfa()>& draw, const Params& p,
                                std::uint64_t draws) {
  std::map<std::string, std::size_t> index;
  for_each_wdfa(p, [&index](const WheelerDfa& d) {
    const std::size_t next = index.size();
    index.emplace(family_key(d), next);
  });
  const std::uint64_t family = index.size();
  if (draws < 100 * family)
    throw std::invalid_argument("uniformity_test: need at least 100 draws per member");

  std::vector<std::uint64_t> observed(family, 0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    const WheelerDfa d = draw();
    const auto it = index.find(family_key(d));
    if (it == index.end())
      throw std::runtime_error("uniformity_test: drawn automaton is outside the family");
    ++observed[it->second];
  }

  const double expected = static_cast<double>(draws) / static_cast<double>(family);
  double stat = 0;
  for (const std::uint64_t obs : observed) {
    const double diff = static_cast<double>(obs) - expected;
    stat += diff * diff / expected;
  }

  ChiSquareReport rep;
  rep.categories = family;
  rep.draws = draws;
  rep.statistic = stat;
  // A one-member family has no degrees of freedom; any draw stream passes.
  rep.threshold = family > 1 ? chi_square_quantile_999(family - 1) : 0.0;
  rep.pass = stat <= rep.threshold;
  return rep;
}

RejectionStats rejection_stats(const Params& p, std::uint64_t runs, Rng& rng) {
  require_valid(p);
  RejectionStats st;
  st.runs = runs;
  std::uint64_t total = 0;
  NullSink sink;
  for (std::uint64_t r = 0; r < runs; ++r) {
    const StreamStats s = sample_stream(p, rng, sink, {});
    total += s.attempts;
    st.max_attempts = std::max(st.max_attempts, s.attempts);
  }
  st.mean_attempts = runs ? static_cast<double>(total) / static_cast<double>(runs) : 0.0;
  return st;
}

}  // namespace wdfa
