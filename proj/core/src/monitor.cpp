#include "seqcpd/monitor.hpp"

#include <cstdio>
#include <stdexcept>

namespace seqcpd {

MonitorState::MonitorState(const ObservationMatrix& learning,
                           ThresholdFunction threshold, MonitorConfig cfg)
    : cfg_(cfg), threshold_(std::move(threshold)) {
  cfg_.validate();
  threshold_.validate();
  if (learning.rows() != cfg_.m)
    throw std::invalid_argument("learning sample must have exactly m rows");
  if (learning.cols() != cfg_.dim)
    throw std::invalid_argument("learning sample dimension mismatch");
  if (!learning.all_finite())
    throw std::invalid_argument("learning sample contains non-finite values");
  if (threshold_.boundaries.front() != cfg_.m ||
      threshold_.boundaries.back() != cfg_.n)
    throw std::invalid_argument("threshold function built for different (m, n)");
  if (has_within_column_ties(learning))
    std::fprintf(stderr,
                 "seqcpd: warning: within-column ties in the learning sample; "
                 "detector values are not margin-free\n");
  dominance_ = DominanceState(learning);
  k_ = cfg_.m;
  report_.detector_path.push_back(0.0);  // D_m(m) = 0
}

Decision MonitorState::step(std::span<const double> x) {
  if (status_ != MonitorStatus::Running)
    throw std::logic_error("monitoring finished");
  dominance_.extend(x);
  ++k_;
  const double d = compute_detector(dominance_, cfg_, k_);
  const double tau = threshold_.level_at(k_);
  report_.detector_path.push_back(d);
  report_.threshold_trace.push_back(tau);

  Decision dec;
  dec.k = k_;
  dec.detector = d;
  dec.threshold = tau;
  if (d > tau) {  // strict inequality; equality continues
    status_ = MonitorStatus::Alarmed;
    dec.status = MonitorStatus::Alarmed;
    dec.changepoint = estimate_changepoint(dominance_, cfg_, k_);
    report_.status = MonitorStatus::Alarmed;
    report_.alarm_index = k_;
    report_.changepoint = dec.changepoint;
  } else if (k_ == cfg_.n) {
    status_ = MonitorStatus::EndedNoAlarm;
    dec.status = MonitorStatus::EndedNoAlarm;
    report_.status = MonitorStatus::EndedNoAlarm;
  } else {
    dec.status = MonitorStatus::Running;
  }
  return dec;
}

MonitorReport MonitorState::run(const ObservationMatrix& stream) {
  if (stream.rows() > cfg_.n - k_)
    throw std::invalid_argument("stream longer than the monitoring horizon");
  for (std::size_t i = 0; i < stream.rows(); ++i) {
    const Decision dec = step(stream.row(i));
    if (dec.status != MonitorStatus::Running) break;
  }
  return report_;
}

}  // namespace seqcpd
