#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wdfa {

// Family parameters: n states, m transitions, alphabet {1..sigma}.
// The family is nonempty iff n >= 2, 1 <= sigma <= n-1 and
// n-1 <= m <= n*sigma.
struct Params {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sigma = 0;
};

// One transition (source, label) -> dest; every field is 1-based.
struct Transition {
  std::uint64_t source = 0;
  std::uint64_t label = 0;
  std::uint64_t dest = 0;

  friend bool operator==(const Transition&, const Transition&) = default;
};

// Canonical transition order: ascending (label, source). This is also the
// emission order of the streaming generator.
inline bool canonical_less(const Transition& a, const Transition& b) {
  return a.label != b.label ? a.label < b.label : a.source < b.source;
}

// A deterministic automaton over states {1..n} (1 is the source) and labels
// {1..sigma}. Instances are only Wheeler automata when check_wheeler says
// so; the struct itself just carries the shape.
struct WheelerDfa {
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  std::vector<Transition> transitions;  // keep in canonical order

  std::uint64_t m() const { return transitions.size(); }

  friend bool operator==(const WheelerDfa&, const WheelerDfa&) = default;
};

// Sorts transitions into canonical order.
void canonicalize(WheelerDfa& d);

// Empty result when the family D_{n,m,sigma} is nonempty; otherwise a
// message naming the first violated constraint, checked in this order:
// n >= 2, sigma >= 1, sigma <= n-1, m >= n-1, m <= n*sigma.
std::optional<std::string> validate_params(const Params& p);

// Throwing flavour (std::domain_error) for internal preconditions.
void require_valid(const Params& p);

struct CheckResult {
  bool ok = false;
  std::string reason;  // empty when ok; first violation plus witness otherwise
};

// Decides whether d is a Wheeler DFA, in O(m log m) time. Violations are
// reported in a fixed scan order: determinism, in-degree, input
// consistency, axiom (i), axiom (ii), effective alphabet; the reason names
// the condition and a concrete witness. Field ranges are a precondition
// (1 <= source,dest <= n, 1 <= label <= sigma); out-of-range fields throw
// std::out_of_range.
CheckResult check_wheeler(const WheelerDfa& d);

}  // namespace wdfa
