#include "wdfa/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdfa {

namespace {

constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 32;

void require_cells_bound(std::uint64_t n, std::uint64_t sigma) {
  if (n != 0 && n * sigma / n != sigma)  // overflow
    throw std::invalid_argument("codec: n*sigma overflows");
  if (n * sigma > kMaxCells)
    throw std::invalid_argument("codec: n*sigma exceeds the 2^32 explicit-bit bound");
}

}  // namespace

std::uint64_t OutMatrix::ones() const {
  return static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), true));
}

std::uint64_t OutMatrix::column_ones(std::uint64_t j) const {
  auto first = bits.begin() + static_cast<std::ptrdiff_t>((j - 1) * n);
  return static_cast<std::uint64_t>(std::count(first, first + static_cast<std::ptrdiff_t>(n), true));
}

std::uint64_t rank_vec(const BitVec& v, std::uint64_t i) {
  if (i > v.size()) throw std::out_of_range("rank_vec: position past the end");
  return static_cast<std::uint64_t>(
      std::count(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i), true));
}

std::uint64_t rank_mat(const OutMatrix& o, std::uint64_t u, std::uint64_t j) {
  if (u < 1 || u > o.n || j < 1 || j > o.sigma)
    throw std::out_of_range("rank_mat: cell out of range");
  return rank_vec(o.bits, (j - 1) * o.n + u);
}

std::string in_mask(const OutMatrix& o) {
  std::string mask(o.ones(), '#');
  std::uint64_t pos = 0;
  for (std::uint64_t j = 1; j <= o.sigma; ++j) {
    const std::uint64_t cnt = o.column_ones(j);
    if (cnt == 0)
      throw std::invalid_argument("in_mask: label column " + std::to_string(j) + " is empty");
    mask[pos] = '1';
    pos += cnt;
  }
  return mask;
}

BitVec fill(std::string_view mask, const BitVec& wildcard_bits) {
  const auto wild = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), '#'));
  if (wild != wildcard_bits.size())
    throw std::invalid_argument("fill: mask has " + std::to_string(wild) +
                                " wildcards, got " + std::to_string(wildcard_bits.size()) +
                                " bits");
  BitVec out;
  out.reserve(mask.size());
  std::size_t w = 0;
  for (char c : mask) {
    if (c == '1')
      out.push_back(true);
    else if (c == '#')
      out.push_back(wildcard_bits[w++]);
    else
      throw std::invalid_argument("fill: mask may only contain '1' and '#'");
  }
  return out;
}

OutMatrix sample_O(const Params& p, const SourceFactory& make_source) {
  require_valid(p);
  require_cells_bound(p.n, p.sigma);
  const std::uint64_t cells = p.n * p.sigma;
  for (;;) {
    auto src = make_source(cells, p.m);
    OutMatrix o{p.n, p.sigma, BitVec(cells, false)};
    while (!src->empty()) o.bits[src->pop() - 1] = true;
    bool covered = true;
    for (std::uint64_t j = 1; j <= p.sigma && covered; ++j)
      covered = o.column_ones(j) != 0;
    if (covered) return o;
  }
}

BitVec sample_I(const OutMatrix& o, const SourceFactory& make_source) {
  const std::uint64_t m = o.ones();
  if (o.n < o.sigma + 1)
    throw std::invalid_argument("sample_I: need sigma <= n-1");
  if (m < o.sigma) throw std::invalid_argument("sample_I: need at least sigma set cells");
  const std::string mask = in_mask(o);  // also rejects empty columns
  auto src = make_source(m - o.sigma, o.n - o.sigma - 1);
  BitVec wild(m - o.sigma, false);
  while (!src->empty()) {
    const std::uint64_t r = src->pop();
    if (r < 1 || r > wild.size())
      throw std::out_of_range("sample_I: wildcard rank out of range");
    wild[r - 1] = true;
  }
  return fill(mask, wild);
}

std::pair<OutMatrix, BitVec> encode(const WheelerDfa& d) {
  require_cells_bound(d.n, d.sigma);
  if (const CheckResult chk = check_wheeler(d); !chk.ok)
    throw std::invalid_argument("encode: not a Wheeler DFA: " + chk.reason);

  OutMatrix o{d.n, d.sigma, BitVec(d.n * d.sigma, false)};
  std::vector<std::uint64_t> indeg(d.n + 1, 0);
  for (const Transition& t : d.transitions) {
    o.set(t.source, t.label, true);
    ++indeg[t.dest];
  }
  BitVec in_vec;
  in_vec.reserve(d.m());
  for (std::uint64_t v = 2; v <= d.n; ++v) {
    in_vec.push_back(true);
    for (std::uint64_t c = 1; c < indeg[v]; ++c) in_vec.push_back(false);
  }
  return {std::move(o), std::move(in_vec)};
}

WheelerDfa decode(const OutMatrix& o, const BitVec& in_vec) {
  require_cells_bound(o.n, o.sigma);
  if (o.bits.size() != o.n * o.sigma)
    throw std::invalid_argument("decode: malformed out-matrix storage");
  const std::uint64_t m = o.ones();
  if (in_vec.size() != m)
    throw std::invalid_argument("decode: |I| = " + std::to_string(in_vec.size()) +
                                " but ||O|| = " + std::to_string(m));
  if (o.n == 0 || rank_vec(in_vec, m) != o.n - 1)
    throw std::invalid_argument("decode: ||I|| must equal n-1");
  {
    std::uint64_t pos = 0;
    for (std::uint64_t j = 1; j <= o.sigma; ++j) {
      const std::uint64_t cnt = o.column_ones(j);
      if (cnt == 0)
        throw std::invalid_argument("decode: label column " + std::to_string(j) + " is empty");
      if (!in_vec[pos])
        throw std::invalid_argument("decode: forced 1-bit missing at position " +
                                    std::to_string(pos + 1));
      pos += cnt;
    }
  }

  WheelerDfa d{o.n, o.sigma, {}};
  d.transitions.reserve(m);
  std::uint64_t idx = 0;  // 0-based position in I of the current set cell
  std::uint64_t dest = 1;
  for (std::uint64_t j = 1; j <= o.sigma; ++j) {
    for (std::uint64_t u = 1; u <= o.n; ++u) {
      if (!o.get(u, j)) continue;
      if (in_vec[idx]) ++dest;
      d.transitions.push_back({u, j, dest});
      ++idx;
    }
  }
  return d;
}

}  // namespace wdfa
