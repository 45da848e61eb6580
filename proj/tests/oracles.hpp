// Independently coded naive-loop reference implementations used to
// cross-check the optimized library code.  Everything here recomputes
// from scratch with direct formulas; nothing is shared with core/src.
#ifndef SEQCPD_TESTS_ORACLES_HPP
#define SEQCPD_TESTS_ORACLES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "seqcpd/multiplier.hpp"
#include "seqcpd/threshold.hpp"
#include "seqcpd/types.hpp"

namespace seqcpd::oracle {

/// F_{j:k} of rows j..k (1-based, inclusive) evaluated at `point`;
/// 0 when j > k.
double ecdf(const ObservationMatrix& x, std::size_t j, std::size_t k,
            std::span<const double> point);

/// Detector value D_m(k), all sums and suprema as explicit loops.
double detector(const ObservationMatrix& x, const MonitorConfig& cfg,
                std::size_t k);

/// One multiplier replicate at fixed multipliers xi_1..xi_m.
ReplicatePath replicate(const ObservationMatrix& learning,
                        const MonitorConfig& cfg, std::span<const double> xi);

/// Empirical quantile via sort-and-scan.
double quantile(std::vector<double> sample, double y);

/// Conditional quantile recursion via filter-and-sort per column.
std::vector<double> conditional_quantiles(const PathSupMatrix& sups,
                                          double order);

}  // namespace seqcpd::oracle

#endif  // SEQCPD_TESTS_ORACLES_HPP
