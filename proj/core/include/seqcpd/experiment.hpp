#ifndef SEQCPD_EXPERIMENT_HPP
#define SEQCPD_EXPERIMENT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "seqcpd/multiplier.hpp"
#include "seqcpd/scenario.hpp"
#include "seqcpd/threshold.hpp"
#include "seqcpd/types.hpp"

namespace seqcpd {

enum class ThresholdMode { MonteCarlo, Bootstrap };

/// One simulation study cell: a scenario monitored `trials` times with
/// thresholds from the selected estimation mode.
struct ExperimentConfig {
  Scenario scenario;
  MonitorConfig cfg;
  ThresholdMode mode = ThresholdMode::MonteCarlo;
  std::size_t trials = 1000;
  std::size_t replicates = 0;  // M or B; 0 picks the mode default
  std::uint64_t seed = 0;
  // bootstrap mode only: bandwidth rule / kernel; B and seed are overridden
  // per trial from `replicates` and `seed`
  MultiplierConfig mult;
};

struct ExperimentResult {
  double rejection_pct = 0.0;
  double mean_delay = 0.0;  // NaN when no qualifying trial
  std::size_t n_trials = 0;
  std::size_t n_false_alarms = 0;  // power studies: alarms before k*
  std::size_t n_missed = 0;        // power studies: no alarm at all
  std::vector<std::size_t> alarm_histogram;  // alarms per threshold interval
};

/// Default replicate counts: M = 1e5 (Monte Carlo), B = 2000 (bootstrap).
std::size_t default_replicates(ThresholdMode mode);

/// Rejection rate of a no-change scenario; the histogram records which
/// threshold interval raised each (false) alarm.
ExperimentResult run_level_experiment(const ExperimentConfig& ec);

/// Rejection rate and mean detection delay of a change scenario.  The
/// delay is averaged only over trials that alarm after k* (no false
/// alarm, change not missed).
ExperimentResult run_power_experiment(const ExperimentConfig& ec);

}  // namespace seqcpd

#endif  // SEQCPD_EXPERIMENT_HPP
