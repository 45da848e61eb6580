#include "seqcpd/quantile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqcpd {

double quantile(std::span<const double> sample, double y) {
  if (sample.empty()) throw std::invalid_argument("empty sample");
  if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("order outside [0,1]");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (y == 0.0) return sorted.front();
  // smallest index r (1-based) with r/n >= y
  std::size_t r = static_cast<std::size_t>(std::ceil(y * static_cast<double>(n)));
  if (r < 1) r = 1;
  if (r > n) r = n;
  return sorted[r - 1];
}

std::vector<std::size_t> interval_boundaries(std::size_t m, std::size_t n,
                                             std::size_t p) {
  if (n <= m) throw std::invalid_argument("n must be > m");
  if (p < 1 || p > n - m) throw std::invalid_argument("too many steps");
  std::vector<std::size_t> b(p + 1);
  b[0] = m;
  for (std::size_t i = 1; i < p; ++i) {
    const double pos = static_cast<double>(i) * static_cast<double>(n - m) /
                       static_cast<double>(p);
    b[i] = m + static_cast<std::size_t>(std::floor(pos + 0.5));
  }
  b[p] = n;
  return b;
}

}  // namespace seqcpd
