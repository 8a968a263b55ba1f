#include "wdfa/random.hpp"

#include <stdexcept>

namespace wdfa {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be nonzero");
  unsigned __int128 prod = static_cast<unsigned __int128>(next()) * bound;
  auto lo = static_cast<std::uint64_t>(prod);
  if (lo < bound) {
    // 2^64 mod bound; draws below it would be biased, reject them.
    const std::uint64_t cutoff = -bound % bound;
    while (lo < cutoff) {
      prod = static_cast<unsigned __int128>(next()) * bound;
      lo = static_cast<std::uint64_t>(prod);
    }
  }
  return static_cast<std::uint64_t>(prod >> 64);
}

std::uint64_t entropy_seed() {
  std::random_device dev;
  return (static_cast<std::uint64_t>(dev()) << 32) ^ dev();
}

}  // namespace wdfa
