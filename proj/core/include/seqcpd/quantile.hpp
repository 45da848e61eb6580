#ifndef SEQCPD_QUANTILE_HPP
#define SEQCPD_QUANTILE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace seqcpd {

/// Empirical quantile inf{x : G_sample(x) >= y} of a finite sample, with
/// quantile(sample, 0) = min.  Throws std::invalid_argument on an empty
/// sample.
double quantile(std::span<const double> sample, double y);

/// Boundaries m = b_0 < b_1 < ... < b_p = n of the p monitoring intervals,
/// b_i = m + round(i * (n - m) / p) with round-half-up.  Interval i covers
/// observation indices {b_{i-1}+1, ..., b_i}.
std::vector<std::size_t> interval_boundaries(std::size_t m, std::size_t n,
                                             std::size_t p);

}  // namespace seqcpd

#endif  // SEQCPD_QUANTILE_HPP
