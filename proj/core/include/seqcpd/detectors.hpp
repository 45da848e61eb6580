#ifndef SEQCPD_DETECTORS_HPP
#define SEQCPD_DETECTORS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "seqcpd/dominance.hpp"
#include "seqcpd/types.hpp"

namespace seqcpd {

/// Weight q(s,t) = max{s^gamma (t-s)^gamma, delta} for 0 <= s <= t.
double weight_q(double s, double t, double gamma, double delta);

/// Detector value D_m(k) for the kind selected in cfg, computed from the
/// first k ingested observations.  Requires m+1 <= k <= state.size().
double compute_detector(const DominanceState& state, const MonitorConfig& cfg,
                        std::size_t k);

/// Per-step detector values; values[0] corresponds to k = m (always 0,
/// by convention) and values.back() to the last ingested index.
struct DetectorPath {
  DetectorKind kind = DetectorKind::T;
  std::vector<double> values;
};

/// Detector path over k = m..state.size().
DetectorPath detector_path(const DominanceState& state, const MonitorConfig& cfg);

/// Estimated change point after an exceedance at step k: the argmax over
/// j in {m,...,k-1} of the weighted Cramer-von-Mises objective, plus one.
/// Ties are broken by the smallest j.
std::size_t estimate_changepoint(const DominanceState& state,
                                 const MonitorConfig& cfg, std::size_t k);

/// One (kind, gamma) combination for the batch evaluator below.
struct DetectorSpec {
  DetectorKind kind = DetectorKind::T;
  double gamma = 0.0;
};

/// Detector paths for several (kind, gamma) combinations in a single pass
/// over the ingested data; out[s][k - m] = D_m(k) for spec s, k = m..n.
/// The expensive empirical-d.f. differences are shared across specs.
std::vector<std::vector<double>> detector_paths_batch(
    const DominanceState& state, std::size_t m, std::size_t n,
    std::span<const DetectorSpec> specs, double delta);

}  // namespace seqcpd

#endif  // SEQCPD_DETECTORS_HPP
