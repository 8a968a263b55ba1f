#pragma once

#include <cstdlib>
#include <string>

#include "wdfa/automaton.hpp"
#include "wdfa/codec.hpp"

namespace wdfa::test {

// The recurring five-state example: n=5, sigma=2, six transitions.
inline WheelerDfa running_example() {
  WheelerDfa d{5, 2, {{2, 1, 2}, {5, 1, 2}, {1, 2, 3}, {3, 2, 4}, {4, 2, 4}, {5, 2, 5}}};
  return d;
}

inline BitVec bits(const std::string& s) {
  BitVec v;
  v.reserve(s.size());
  for (char c : s) v.push_back(c == '1');
  return v;
}

inline std::string bit_string(const BitVec& v) {
  std::string s;
  s.reserve(v.size());
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

}  // namespace wdfa::test
