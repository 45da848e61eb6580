#include "seqcpd/experiment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "seqcpd/monitor.hpp"
#include "seqcpd/parallel.hpp"
#include "seqcpd/rng.hpp"

namespace seqcpd {

namespace {

constexpr std::uint64_t kThresholdStream = 0x7468726573686f6cULL;

struct TrialOutcome {
  bool alarmed = false;
  std::size_t alarm_index = 0;
  std::size_t interval = 0;  // 1-based threshold interval of the alarm
};

// Runs all trials; outcome[t] depends only on (seed, t), so the result is
// independent of scheduling.
std::vector<TrialOutcome> run_trials(const ExperimentConfig& ec) {
  if (ec.trials == 0) throw std::invalid_argument("no trials");
  ec.scenario.validate();
  ec.cfg.validate();
  if (ec.scenario.m != ec.cfg.m || ec.scenario.n != ec.cfg.n)
    throw std::invalid_argument("scenario and monitor config disagree on (m, n)");
  const std::size_t reps =
      ec.replicates > 0 ? ec.replicates : default_replicates(ec.mode);

  ThresholdFunction shared;
  if (ec.mode == ThresholdMode::MonteCarlo)
    shared = mc_threshold(ec.cfg, reps, derive_seed(ec.seed, kThresholdStream));

  std::vector<TrialOutcome> outcomes(ec.trials);
  parallel_for(ec.trials, [&](std::size_t t) {
    const std::uint64_t trial_seed = derive_seed(ec.seed, t + 1);
    const ObservationMatrix data = generate(ec.scenario, trial_seed);
    const ObservationMatrix learning = data.slice_rows(0, ec.cfg.m);

    ThresholdFunction threshold;
    if (ec.mode == ThresholdMode::MonteCarlo) {
      threshold = shared;
    } else {
      MultiplierConfig mult = ec.mult;
      mult.B = reps;
      mult.seed = derive_seed(trial_seed, kThresholdStream);
      threshold = bootstrap_threshold(learning, ec.cfg, mult);
    }

    MonitorState monitor(learning, threshold, ec.cfg);
    const MonitorReport report =
        monitor.run(data.slice_rows(ec.cfg.m, ec.cfg.n));
    TrialOutcome& out = outcomes[t];
    if (report.status == MonitorStatus::Alarmed) {
      out.alarmed = true;
      out.alarm_index = *report.alarm_index;
      out.interval = threshold.interval_of(out.alarm_index);
    }
  });
  return outcomes;
}

}  // namespace

std::size_t default_replicates(ThresholdMode mode) {
  return mode == ThresholdMode::MonteCarlo ? 100000 : 2000;
}

ExperimentResult run_level_experiment(const ExperimentConfig& ec) {
  if (ec.scenario.change)
    throw std::invalid_argument("level experiments need a no-change scenario");
  const auto outcomes = run_trials(ec);
  ExperimentResult res;
  res.n_trials = outcomes.size();
  res.alarm_histogram.assign(ec.cfg.p, 0);
  std::size_t alarms = 0;
  for (const auto& out : outcomes) {
    if (!out.alarmed) continue;
    ++alarms;
    ++res.alarm_histogram[out.interval - 1];
  }
  res.n_false_alarms = alarms;
  res.rejection_pct =
      100.0 * static_cast<double>(alarms) / static_cast<double>(res.n_trials);
  res.mean_delay = std::numeric_limits<double>::quiet_NaN();
  return res;
}

ExperimentResult run_power_experiment(const ExperimentConfig& ec) {
  if (!ec.scenario.change)
    throw std::invalid_argument("power experiments need a change scenario");
  const std::size_t kstar = ec.scenario.change->at;
  const auto outcomes = run_trials(ec);
  ExperimentResult res;
  res.n_trials = outcomes.size();
  res.alarm_histogram.assign(ec.cfg.p, 0);
  std::size_t alarms = 0, usable = 0;
  double delay_sum = 0.0;
  for (const auto& out : outcomes) {
    if (!out.alarmed) {
      ++res.n_missed;
      continue;
    }
    ++alarms;
    ++res.alarm_histogram[out.interval - 1];
    if (out.alarm_index <= kstar) {
      ++res.n_false_alarms;
    } else {
      ++usable;
      delay_sum += static_cast<double>(out.alarm_index - kstar);
    }
  }
  res.rejection_pct =
      100.0 * static_cast<double>(alarms) / static_cast<double>(res.n_trials);
  res.mean_delay = usable > 0
                       ? delay_sum / static_cast<double>(usable)
                       : std::numeric_limits<double>::quiet_NaN();
  return res;
}

}  // namespace seqcpd
