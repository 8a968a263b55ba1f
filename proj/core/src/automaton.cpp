#include "wdfa/automaton.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdfa {

namespace {

std::string txt(const Transition& t) {
  return "(" + std::to_string(t.source) + "," + std::to_string(t.label) +
         ")->" + std::to_string(t.dest);
}

}  // namespace

void canonicalize(WheelerDfa& d) {
  std::sort(d.transitions.begin(), d.transitions.end(),
            [](const Transition& a, const Transition& b) { return canonical_less(a, b); });
}

std::optional<std::string> validate_params(const Params& p) {
  if (p.n < 2) return "n must be at least 2 (got n=" + std::to_string(p.n) + ")";
  if (p.sigma < 1) return "sigma must be at least 1";
  if (p.sigma > p.n - 1)
    return "sigma must be at most n-1 (got sigma=" + std::to_string(p.sigma) +
           ", n=" + std::to_string(p.n) + ")";
  if (p.m < p.n - 1)
    return "m must be at least n-1 (got m=" + std::to_string(p.m) +
           ", n=" + std::to_string(p.n) + ")";
  if (p.m > p.n * p.sigma)
    return "m must be at most n*sigma (got m=" + std::to_string(p.m) +
           ", n*sigma=" + std::to_string(p.n * p.sigma) + ")";
  return std::nullopt;
}

void require_valid(const Params& p) {
  if (auto err = validate_params(p)) throw std::domain_error("empty family: " + *err);
}

CheckResult check_wheeler(const WheelerDfa& d) {
  for (const Transition& t : d.transitions) {
    if (t.source < 1 || t.source > d.n || t.dest < 1 || t.dest > d.n ||
        t.label < 1 || t.label > d.sigma)
      throw std::out_of_range("check_wheeler: transition " + txt(t) + " out of range");
  }

  std::vector<Transition> ts = d.transitions;
  std::sort(ts.begin(), ts.end(),
            [](const Transition& a, const Transition& b) { return canonical_less(a, b); });

  // determinism: at most one transition per (source, label)
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (ts[i].source == ts[i - 1].source && ts[i].label == ts[i - 1].label)
      return {false, "determinism: state " + std::to_string(ts[i].source) +
                         " has two transitions with label " + std::to_string(ts[i].label)};
  }

  // in-degree: the source state 1 has none, every other state at least one
  std::vector<std::uint64_t> indeg(d.n + 1, 0);
  for (const Transition& t : ts) ++indeg[t.dest];
  if (indeg[1] != 0) {
    for (const Transition& t : ts)
      if (t.dest == 1)
        return {false, "in-degree: source state 1 has incoming transition " + txt(t)};
  }
  for (std::uint64_t v = 2; v <= d.n; ++v) {
    if (indeg[v] == 0)
      return {false, "in-degree: state " + std::to_string(v) + " has no incoming transition"};
  }

  // input consistency: all transitions into a state carry the same label
  std::vector<std::uint64_t> in_label(d.n + 1, 0);
  for (const Transition& t : ts) {
    if (in_label[t.dest] == 0)
      in_label[t.dest] = t.label;
    else if (in_label[t.dest] != t.label)
      return {false, "input consistency: state " + std::to_string(t.dest) +
                         " receives labels " + std::to_string(in_label[t.dest]) + " and " +
                         std::to_string(t.label)};
  }

  // axiom (i): a smaller label never reaches a state >= one reached by a
  // larger label. With ts sorted by (label, source) it is enough to compare
  // the max dest of each label block against the min dest of the next
  // nonempty block; transitivity covers distant pairs.
  std::size_t block = 0;
  const Transition* prev_max = nullptr;
  while (block < ts.size()) {
    std::size_t end = block;
    const Transition* blk_min = &ts[block];
    const Transition* blk_max = &ts[block];
    while (end < ts.size() && ts[end].label == ts[block].label) {
      if (ts[end].dest < blk_min->dest) blk_min = &ts[end];
      if (ts[end].dest >= blk_max->dest) blk_max = &ts[end];
      ++end;
    }
    if (prev_max != nullptr && prev_max->dest >= blk_min->dest)
      return {false, "axiom (i): " + txt(*prev_max) + " and " + txt(*blk_min) +
                         " have labels " + std::to_string(prev_max->label) + "<" +
                         std::to_string(blk_min->label) + " but dests " +
                         std::to_string(prev_max->dest) + ">=" + std::to_string(blk_min->dest)};
    prev_max = blk_max;
    block = end;
  }

  // axiom (ii): within one label block (sources strictly ascend after the
  // determinism check) the dests must be non-decreasing.
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (ts[i].label == ts[i - 1].label && ts[i].dest < ts[i - 1].dest)
      return {false, "axiom (ii): sources " + std::to_string(ts[i - 1].source) + "<" +
                         std::to_string(ts[i].source) + " but dests " +
                         std::to_string(ts[i - 1].dest) + ">" + std::to_string(ts[i].dest) +
                         " under label " + std::to_string(ts[i].label)};
  }

  // effective alphabet: every label occurs
  std::vector<bool> used(d.sigma + 1, false);
  for (const Transition& t : ts) used[t.label] = true;
  for (std::uint64_t a = 1; a <= d.sigma; ++a) {
    if (!used[a])
      return {false, "effective alphabet: label " + std::to_string(a) +
                         " is not used by any transition"};
  }

  return {true, {}};
}

}  // namespace wdfa
