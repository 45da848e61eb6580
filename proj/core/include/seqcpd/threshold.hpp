#ifndef SEQCPD_THRESHOLD_HPP
#define SEQCPD_THRESHOLD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqcpd/detectors.hpp"
#include "seqcpd/multiplier.hpp"
#include "seqcpd/types.hpp"

namespace seqcpd {

/// Per-replicate, per-interval suprema of detector paths: entry (r, i) is
/// the supremum of replicate path r over monitoring interval i.
struct PathSupMatrix {
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  std::size_t rows() const { return cols == 0 ? 0 : data.size() / cols; }
  double operator()(std::size_t r, std::size_t i) const { return data[r * cols + i]; }
};

/// Sequential conditional quantiles: g_1 is the plain quantile of column 1
/// at `order`; g_i is the quantile of column i restricted to the rows that
/// stayed below g_1..g_{i-1} in the earlier columns.
std::vector<double> conditional_quantiles(const PathSupMatrix& sups, double order);

/// xi = 1 - (1 - alpha)^{1/steps}, the per-step false-alarm probability.
double xi_from_alpha(double alpha, std::size_t steps);

/// Reduces a detector path over k = m..n (values[k - m]) to its p
/// per-interval suprema given the interval boundaries.
std::vector<double> interval_sups(std::span<const double> path,
                                  std::span<const std::size_t> boundaries);

/// Monte Carlo threshold function for univariate i.i.d. monitoring:
/// simulates M standard-uniform paths of length n, computes their
/// detector paths and applies the conditional-quantile recursion at
/// order (1 - alpha)^{1/p}.  Does not depend on any learning data.
ThresholdFunction mc_threshold(const MonitorConfig& cfg, std::size_t M,
                               std::uint64_t seed);

/// One (kind, gamma, p) combination for the batch estimator below.
struct McRequest {
  DetectorKind kind = DetectorKind::T;
  double gamma = 0.0;
  std::size_t p = 1;
};

/// Thresholds for several (kind, gamma, p) combinations sharing one set
/// of M simulated paths.  mc_threshold(cfg, M, seed) equals the batch
/// result for the single matching request.
std::vector<ThresholdFunction> mc_thresholds_batch(
    const MonitorConfig& base, std::span<const McRequest> requests,
    std::size_t M, std::uint64_t seed);

/// Bootstrap threshold function from dependent multiplier replicate paths
/// of the learning sample, mapped onto the p monitoring intervals by the
/// proportional step rule.
ThresholdFunction bootstrap_threshold(const ObservationMatrix& learning,
                                      const MonitorConfig& cfg,
                                      const MultiplierConfig& mult);

/// Per-interval suprema of one replicate path under the proportional
/// mapping of grid steps {m'+1..J} onto p intervals.
std::vector<double> replicate_interval_sups(const ReplicatePath& path,
                                            std::size_t p);

}  // namespace seqcpd

#endif  // SEQCPD_THRESHOLD_HPP
