#include "seqcpd/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqcpd {

double weight_q(double s, double t, double gamma, double delta) {
  if (s < 0.0 || s > t) throw std::invalid_argument("invalid arguments");
  return std::max(std::pow(s, gamma) * std::pow(t - s, gamma), delta);
}

namespace {

// j(k-j) / (m^{3/2} q(j/m, k/m))
double weight_factor(std::size_t j, std::size_t k, std::size_t m, double gamma,
                     double delta) {
  const double md = static_cast<double>(m);
  const double q = weight_q(static_cast<double>(j) / md,
                            static_cast<double>(k) / md, gamma, delta);
  return static_cast<double>(j) * static_cast<double>(k - j) /
         (md * std::sqrt(md) * q);
}

// max_i |F_{1:j}(X_i) - F_{j+1:k}(X_i)| and sum_i of the squared
// differences, i over the k observed data points.
void diff_stats(const DominanceState& s, std::size_t j, std::size_t k,
                double* max_abs, double* sum_sq) {
  const double inv_j = 1.0 / static_cast<double>(j);
  const double inv_kj = 1.0 / static_cast<double>(k - j);
  double ma = 0.0, ss = 0.0;
  for (std::size_t i = 1; i <= k; ++i) {
    const int pj = s.prefix(i, j);
    const int pk = s.prefix(i, k);
    const double d = static_cast<double>(pj) * inv_j -
                     static_cast<double>(pk - pj) * inv_kj;
    ma = std::max(ma, std::fabs(d));
    ss += d * d;
  }
  *max_abs = ma;
  *sum_sq = ss;
}

void check_indices(const DominanceState& state, std::size_t m, std::size_t k) {
  if (k <= m) throw std::invalid_argument("monitoring not started");
  if (k > state.size()) throw std::out_of_range("index beyond ingested data");
}

}  // namespace

double compute_detector(const DominanceState& state, const MonitorConfig& cfg,
                        std::size_t k) {
  check_indices(state, cfg.m, k);
  const std::size_t m = cfg.m;
  const double kd = static_cast<double>(k);
  double max_abs, sum_sq;

  switch (cfg.detector) {
    case DetectorKind::P:
    case DetectorKind::Q: {
      diff_stats(state, m, k, &max_abs, &sum_sq);
      const double w = static_cast<double>(m) * static_cast<double>(k - m) /
                       (static_cast<double>(m) * std::sqrt(static_cast<double>(m)));
      if (cfg.detector == DetectorKind::P) return w * max_abs;
      return w * w * sum_sq / kd;
    }
    case DetectorKind::R: {
      double best = 0.0;
      for (std::size_t j = m; j <= k - 1; ++j) {
        diff_stats(state, j, k, &max_abs, &sum_sq);
        best = std::max(best, weight_factor(j, k, m, cfg.gamma, cfg.delta) * max_abs);
      }
      return best;
    }
    case DetectorKind::S: {
      double best = 0.0;
      for (std::size_t j = m; j <= k - 1; ++j) {
        diff_stats(state, j, k, &max_abs, &sum_sq);
        const double w = weight_factor(j, k, m, cfg.gamma, cfg.delta);
        best = std::max(best, w * w * sum_sq / kd);
      }
      return best;
    }
    case DetectorKind::T: {
      double acc = 0.0;
      for (std::size_t j = m; j <= k - 1; ++j) {
        diff_stats(state, j, k, &max_abs, &sum_sq);
        const double w = weight_factor(j, k, m, cfg.gamma, cfg.delta);
        acc += w * w * sum_sq / kd;
      }
      return acc / static_cast<double>(m);
    }
  }
  throw std::logic_error("unknown detector kind");
}

DetectorPath detector_path(const DominanceState& state, const MonitorConfig& cfg) {
  DetectorPath path;
  path.kind = cfg.detector;
  path.values.push_back(0.0);  // D_m(m) = 0 by convention
  for (std::size_t k = cfg.m + 1; k <= state.size(); ++k)
    path.values.push_back(compute_detector(state, cfg, k));
  return path;
}

std::size_t estimate_changepoint(const DominanceState& state,
                                 const MonitorConfig& cfg, std::size_t k) {
  check_indices(state, cfg.m, k);
  const std::size_t m = cfg.m;
  const double kd = static_cast<double>(k);
  std::size_t best_j = m;
  double best = -1.0;
  double max_abs, sum_sq;
  for (std::size_t j = m; j <= k - 1; ++j) {
    diff_stats(state, j, k, &max_abs, &sum_sq);
    const double w = weight_factor(j, k, m, cfg.gamma, cfg.delta);
    const double obj = w * w * sum_sq / kd;
    if (obj > best) {
      best = obj;
      best_j = j;
    }
  }
  return best_j + 1;
}

std::vector<std::vector<double>> detector_paths_batch(
    const DominanceState& state, std::size_t m, std::size_t n,
    std::span<const DetectorSpec> specs, double delta) {
  if (n <= m || n > state.size())
    throw std::invalid_argument("bad monitoring range");
  const std::size_t nspec = specs.size();
  std::vector<std::vector<double>> out(nspec);
  for (auto& v : out) v.assign(n - m + 1, 0.0);

  // distinct gammas so q is evaluated once per (j, k, gamma)
  std::vector<double> gammas;
  std::vector<std::size_t> gamma_of(nspec);
  for (std::size_t s = 0; s < nspec; ++s) {
    auto it = std::find(gammas.begin(), gammas.end(), specs[s].gamma);
    if (it == gammas.end()) {
      gamma_of[s] = gammas.size();
      gammas.push_back(specs[s].gamma);
    } else {
      gamma_of[s] = static_cast<std::size_t>(it - gammas.begin());
    }
  }

  std::vector<double> wf(gammas.size());
  std::vector<double> t_acc(nspec);
  std::vector<double> best(nspec);
  double max_abs, sum_sq;
  for (std::size_t k = m + 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    std::fill(t_acc.begin(), t_acc.end(), 0.0);
    std::fill(best.begin(), best.end(), 0.0);
    double pq_max = 0.0, pq_ss = 0.0;
    for (std::size_t j = m; j <= k - 1; ++j) {
      diff_stats(state, j, k, &max_abs, &sum_sq);
      if (j == m) {
        pq_max = max_abs;
        pq_ss = sum_sq;
      }
      for (std::size_t g = 0; g < gammas.size(); ++g)
        wf[g] = weight_factor(j, k, m, gammas[g], delta);
      for (std::size_t s = 0; s < nspec; ++s) {
        const double w = wf[gamma_of[s]];
        switch (specs[s].kind) {
          case DetectorKind::R:
            best[s] = std::max(best[s], w * max_abs);
            break;
          case DetectorKind::S:
            best[s] = std::max(best[s], w * w * sum_sq / kd);
            break;
          case DetectorKind::T:
            t_acc[s] += w * w * sum_sq / kd;
            break;
          default:
            break;
        }
      }
    }
    const double wp = static_cast<double>(k - m) / std::sqrt(static_cast<double>(m));
    for (std::size_t s = 0; s < nspec; ++s) {
      double value = 0.0;
      switch (specs[s].kind) {
        case DetectorKind::R:
        case DetectorKind::S:
          value = best[s];
          break;
        case DetectorKind::T:
          value = t_acc[s] / static_cast<double>(m);
          break;
        case DetectorKind::P:
          value = wp * pq_max;
          break;
        case DetectorKind::Q:
          value = wp * wp * pq_ss / kd;
          break;
      }
      out[s][k - m] = value;
    }
  }
  return out;
}

}  // namespace seqcpd
