#ifndef SEQCPD_MONITOR_HPP
#define SEQCPD_MONITOR_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "seqcpd/detectors.hpp"
#include "seqcpd/dominance.hpp"
#include "seqcpd/types.hpp"

namespace seqcpd {

enum class MonitorStatus { Running, Alarmed, EndedNoAlarm };

/// Outcome of one monitoring step.
struct Decision {
  MonitorStatus status = MonitorStatus::Running;
  std::size_t k = 0;       // observation index just processed
  double detector = 0.0;
  double threshold = 0.0;
  std::size_t changepoint = 0;  // set when status == Alarmed
};

/// Full trace of a monitoring run.
struct MonitorReport {
  MonitorStatus status = MonitorStatus::Running;
  std::optional<std::size_t> alarm_index;
  std::optional<std::size_t> changepoint;
  std::vector<double> detector_path;    // D_m(k), k = m..last processed
  std::vector<double> threshold_trace;  // tau_m(k), k = m+1..last processed
};

/// The online state machine: learning sample in, then one observation at
/// a time; the first k with D_m(k) > tau_m(k) raises the alarm.
class MonitorState {
 public:
  MonitorState(const ObservationMatrix& learning, ThresholdFunction threshold,
               MonitorConfig cfg);

  /// Processes observation X_{k+1}.  Throws when called on a terminal
  /// state.
  Decision step(std::span<const double> x);

  /// Folds step over the stream, stopping at the first alarm.
  MonitorReport run(const ObservationMatrix& stream);

  MonitorStatus status() const { return status_; }
  std::size_t current_index() const { return k_; }
  const MonitorReport& report() const { return report_; }
  const MonitorConfig& config() const { return cfg_; }

 private:
  MonitorConfig cfg_;
  ThresholdFunction threshold_;
  DominanceState dominance_;
  std::size_t k_ = 0;
  MonitorStatus status_ = MonitorStatus::Running;
  MonitorReport report_;
};

}  // namespace seqcpd

#endif  // SEQCPD_MONITOR_HPP
