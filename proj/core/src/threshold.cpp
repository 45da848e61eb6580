#include "seqcpd/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "seqcpd/parallel.hpp"
#include "seqcpd/quantile.hpp"
#include "seqcpd/rng.hpp"

namespace seqcpd {

std::vector<double> conditional_quantiles(const PathSupMatrix& sups, double order) {
  const std::size_t p = sups.cols;
  const std::size_t rows = sups.rows();
  if (p == 0 || rows == 0) throw std::invalid_argument("empty sup matrix");
  std::vector<std::size_t> survivors(rows);
  std::iota(survivors.begin(), survivors.end(), 0);
  std::vector<double> levels(p);
  std::vector<double> column;
  for (std::size_t i = 0; i < p; ++i) {
    if (survivors.empty())
      throw std::runtime_error("degenerate conditioning: increase replicates");
    column.clear();
    for (std::size_t r : survivors) column.push_back(sups(r, i));
    const double g = quantile(column, order);
    levels[i] = g;
    std::erase_if(survivors, [&](std::size_t r) { return sups(r, i) > g; });
  }
  return levels;
}

double xi_from_alpha(double alpha, std::size_t steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (steps == 1) return alpha;  // exact; avoids 1 - (1 - alpha) rounding
  return 1.0 - std::pow(1.0 - alpha, 1.0 / static_cast<double>(steps));
}

std::vector<double> interval_sups(std::span<const double> path,
                                  std::span<const std::size_t> boundaries) {
  const std::size_t p = boundaries.size() - 1;
  const std::size_t m = boundaries.front();
  std::vector<double> sups(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    double s = 0.0;
    for (std::size_t k = boundaries[i] + 1; k <= boundaries[i + 1]; ++k)
      s = std::max(s, path[k - m]);
    sups[i] = s;
  }
  return sups;
}

namespace {

ThresholdFunction make_threshold(std::vector<std::size_t> boundaries,
                                 std::vector<double> levels, double order) {
  ThresholdFunction tf;
  tf.boundaries = std::move(boundaries);
  tf.levels = std::move(levels);
  tf.order = order;
  tf.validate();
  return tf;
}

}  // namespace

std::vector<ThresholdFunction> mc_thresholds_batch(
    const MonitorConfig& base, std::span<const McRequest> requests,
    std::size_t M, std::uint64_t seed) {
  base.validate();
  if (base.dim != 1)
    throw std::invalid_argument("Monte Carlo thresholds require univariate i.i.d. mode");
  if (M < 1) throw std::invalid_argument("need at least one Monte Carlo path");
  if (requests.empty()) return {};
  const std::size_t m = base.m, n = base.n;

  // distinct (kind, gamma) specs feeding the shared path evaluation
  std::vector<DetectorSpec> specs;
  std::vector<std::size_t> spec_of(requests.size());
  for (std::size_t r = 0; r < requests.size(); ++r) {
    const DetectorSpec want{requests[r].kind, requests[r].gamma};
    auto it = std::find_if(specs.begin(), specs.end(), [&](const DetectorSpec& s) {
      return s.kind == want.kind && s.gamma == want.gamma;
    });
    if (it == specs.end()) {
      spec_of[r] = specs.size();
      specs.push_back(want);
    } else {
      spec_of[r] = static_cast<std::size_t>(it - specs.begin());
    }
  }

  std::vector<std::vector<std::size_t>> boundaries(requests.size());
  for (std::size_t r = 0; r < requests.size(); ++r)
    boundaries[r] = interval_boundaries(m, n, requests[r].p);

  // per request: M x p sup matrix
  std::vector<PathSupMatrix> sups(requests.size());
  for (std::size_t r = 0; r < requests.size(); ++r) {
    sups[r].cols = requests[r].p;
    sups[r].data.assign(M * requests[r].p, 0.0);
  }

  parallel_for(M, [&](std::size_t s) {
    DominanceState state;
    for (std::size_t i = 1; i <= n; ++i) {
      const double u = counter_uniform(seed, s, i);
      state.extend(std::span<const double>(&u, 1));
    }
    const auto paths = detector_paths_batch(state, m, n, specs, base.delta);
    for (std::size_t r = 0; r < requests.size(); ++r) {
      const auto is = interval_sups(paths[spec_of[r]], boundaries[r]);
      std::copy(is.begin(), is.end(), sups[r].data.begin() + s * requests[r].p);
    }
  });

  std::vector<ThresholdFunction> out;
  out.reserve(requests.size());
  for (std::size_t r = 0; r < requests.size(); ++r) {
    const double order =
        std::pow(1.0 - base.alpha, 1.0 / static_cast<double>(requests[r].p));
    out.push_back(make_threshold(boundaries[r],
                                 conditional_quantiles(sups[r], order), order));
  }
  return out;
}

ThresholdFunction mc_threshold(const MonitorConfig& cfg, std::size_t M,
                               std::uint64_t seed) {
  const McRequest req{cfg.detector, cfg.gamma, cfg.p};
  return mc_thresholds_batch(cfg, std::span<const McRequest>(&req, 1), M,
                             seed)[0];
}

std::vector<double> replicate_interval_sups(const ReplicatePath& path,
                                            std::size_t p) {
  const std::size_t mp = path.m_prime;
  const std::size_t J = mp + path.values.size() - 1;
  const std::size_t len = J - mp;
  if (p > len) throw std::invalid_argument("p exceeds replicate grid length");
  std::vector<double> sups(p, 0.0);
  for (std::size_t i = 1; i <= p; ++i) {
    const auto step = [&](std::size_t idx) {
      const double pos = static_cast<double>(idx) * static_cast<double>(len) /
                         static_cast<double>(p);
      return mp + static_cast<std::size_t>(std::floor(pos + 0.5));
    };
    double s = 0.0;
    for (std::size_t j = step(i - 1) + 1; j <= step(i); ++j)
      s = std::max(s, path.values[j - mp]);
    sups[i - 1] = s;
  }
  return sups;
}

ThresholdFunction bootstrap_threshold(const ObservationMatrix& learning,
                                      const MonitorConfig& cfg,
                                      const MultiplierConfig& mult) {
  cfg.validate();
  if (learning.rows() != cfg.m)
    throw std::invalid_argument("learning sample must have m rows");
  const std::size_t mp = rescaled_clock(cfg.m, cfg.n);
  if (cfg.p > cfg.m - mp) throw std::invalid_argument("p exceeds m - m'");

  const auto paths = replicate_paths(learning, cfg, mult);
  PathSupMatrix sups;
  sups.cols = cfg.p;
  sups.data.assign(paths.size() * cfg.p, 0.0);
  for (std::size_t b = 0; b < paths.size(); ++b) {
    const auto is = replicate_interval_sups(paths[b], cfg.p);
    std::copy(is.begin(), is.end(), sups.data.begin() + b * cfg.p);
  }
  const double order =
      std::pow(1.0 - cfg.alpha, 1.0 / static_cast<double>(cfg.p));
  return make_threshold(interval_boundaries(cfg.m, cfg.n, cfg.p),
                        conditional_quantiles(sups, order), order);
}

}  // namespace seqcpd
