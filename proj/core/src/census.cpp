#include "wdfa/census.hpp"

#include <cmath>
#include <stdexcept>

namespace wdfa {

BigCount binom(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigCount r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact: the running product is C(a-b+i, i)
  }
  return r;
}

BigCount count_O(std::uint64_t n, std::uint64_t m, std::uint64_t sigma) {
  const auto sn = static_cast<std::int64_t>(n);
  const auto sm = static_cast<std::int64_t>(m);
  const auto ss = static_cast<std::int64_t>(sigma);
  BigCount total = 0;
  for (std::int64_t j = 0; j <= ss; ++j) {
    const BigCount term = binom(ss, j) * binom(sn * (ss - j), sm);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;  // counts a set, hence never negative
}

BigCount count_I(std::uint64_t n, std::uint64_t m, std::uint64_t sigma) {
  return binom(static_cast<std::int64_t>(m) - static_cast<std::int64_t>(sigma),
               static_cast<std::int64_t>(n) - static_cast<std::int64_t>(sigma) - 1);
}

BigCount count_wdfa_or_zero(std::uint64_t n, std::uint64_t m, std::uint64_t sigma) {
  const BigCount in = count_I(n, m, sigma);
  if (in == 0) return 0;
  return count_O(n, m, sigma) * in;
}

BigCount count_wdfa(const Params& p) {
  require_valid(p);
  return count_wdfa_or_zero(p.n, p.m, p.sigma);
}

BigCount count_wdfa_noneffective(const Params& p) {
  if (p.n < 2) throw std::domain_error("count: n must be at least 2");
  if (p.sigma < 1) throw std::domain_error("count: sigma must be at least 1");
  if (p.m < p.n - 1) throw std::domain_error("count: m must be at least n-1");
  BigCount total = 0;
  for (std::uint64_t k = 1; k <= p.sigma; ++k)
    total += binom(static_cast<std::int64_t>(p.sigma), static_cast<std::int64_t>(k)) *
             count_wdfa_or_zero(p.n, p.m, k);
  if (total == 0)
    throw std::domain_error("count: family is empty for every nonempty label subset");
  return total;
}

BigCount count_all_m(std::uint64_t n, std::uint64_t sigma) {
  if (n < 2) throw std::domain_error("count: n must be at least 2");
  if (sigma < 1 || sigma > n - 1) throw std::domain_error("count: need 1 <= sigma <= n-1");
  BigCount total = 0;
  for (std::uint64_t m = n - 1; m <= n * sigma; ++m)
    total += count_wdfa_or_zero(n, m, sigma);
  return total;
}

double log2_count(const BigCount& x) {
  if (x <= 0) throw std::domain_error("log2_count: argument must be positive");
  const unsigned bits = boost::multiprecision::msb(x);  // floor(log2 x)
  if (bits <= 62) return std::log2(x.convert_to<double>());
  const unsigned shift = bits - 62;  // keep a 63-bit mantissa
  const BigCount top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

Bounds bounds(std::uint64_t n, std::uint64_t sigma, double eps) {
  if (!(eps > 0.0) || eps > 0.5) throw std::domain_error("bounds: eps must lie in (0, 1/2]");
  if (sigma < 1) throw std::domain_error("bounds: sigma must be at least 1");
  const auto nd = static_cast<double>(n);
  const auto sd = static_cast<double>(sigma);
  if (sd > (1.0 - eps) * nd) throw std::domain_error("bounds: need sigma <= (1-eps)*n");
  if (nd < 2.0 / eps) throw std::domain_error("bounds: need n >= 2/eps");
  Bounds b;
  b.lower = nd * sd + (nd - sd) * std::log2(sd) - (nd + std::log2(sd));
  const double ratio = std::exp(1.0) * sd * nd / (nd - sd - 1.0);
  b.upper = nd * sd + (nd - sd) * std::log2(ratio);
  return b;
}

}  // namespace wdfa
