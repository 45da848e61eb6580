#include "seqcpd/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "seqcpd/detectors.hpp"
#include "seqcpd/rng.hpp"

namespace seqcpd {

double parzen_kernel(double x) {
  const double a = std::fabs(x);
  if (a <= 0.5) return 1.0 - 6.0 * a * a + 6.0 * a * a * a;
  if (a <= 1.0) {
    const double b = 1.0 - a;
    return 2.0 * b * b * b;
  }
  return 0.0;
}

std::size_t estimate_bandwidth(const ObservationMatrix& learning,
                               const MultiplierConfig& cfg) {
  if (cfg.ell_rule == BandwidthRule::Fixed) return cfg.ell;
  const double m = static_cast<double>(learning.rows());
  const double ell = std::floor(std::cbrt(m) + 0.5);
  return std::max<std::size_t>(1, static_cast<std::size_t>(ell));
}

std::vector<double> multiplier_weights(std::size_t ell) {
  if (ell < 1) throw std::invalid_argument("bandwidth must be >= 1");
  const std::size_t h = (ell - 1) / 2;
  std::vector<double> w(2 * h + 1);
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const double x = (static_cast<double>(j) - static_cast<double>(h)) /
                     (static_cast<double>(h) + 0.5);
    w[j] = parzen_kernel(x);
    sum_sq += w[j] * w[j];
  }
  const double scale = 1.0 / std::sqrt(sum_sq);
  for (double& v : w) v *= scale;
  return w;
}

std::vector<double> induced_correlation(std::span<const double> w) {
  std::vector<double> phi(w.size());
  for (std::size_t h = 0; h < w.size(); ++h) {
    double acc = 0.0;
    for (std::size_t j = 0; j + h < w.size(); ++j) acc += w[j] * w[j + h];
    phi[h] = acc;
  }
  return phi;
}

std::vector<double> gen_multipliers(std::size_t m, std::size_t ell,
                                    std::uint64_t seed,
                                    std::uint64_t replicate_index) {
  if (ell >= m) throw std::invalid_argument("bandwidth too large");
  const std::vector<double> w = multiplier_weights(ell);
  const std::size_t h = (w.size() - 1) / 2;
  // normals at positions 1-h .. m+h, indexed from 0
  std::vector<double> z(m + 2 * h);
  for (std::size_t p = 0; p < z.size(); ++p)
    z[p] = counter_normal(seed, replicate_index, p);
  std::vector<double> xi(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += w[j] * z[i + j];
    xi[i] = acc;
  }
  return xi;
}

std::size_t rescaled_clock(std::size_t m, std::size_t n) { return m * m / n; }

namespace {

// componentwise indicator matrix ind[r][i] = 1(X_r <= X_i) of the
// learning sample, plus F_{1:m} at the learning points
struct LearningLayout {
  std::size_t m = 0;
  std::vector<std::uint8_t> ind;  // r * m + i
  std::vector<double> edf;        // F_{1:m}(X_i)
};

LearningLayout layout_learning(const ObservationMatrix& x) {
  LearningLayout lay;
  const std::size_t m = x.rows();
  const std::size_t d = x.cols();
  lay.m = m;
  lay.ind.assign(m * m, 0);
  lay.edf.assign(m, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      bool dom = true;
      for (std::size_t c = 0; c < d; ++c) {
        if (x(r, c) > x(i, c)) {
          dom = false;
          break;
        }
      }
      lay.ind[r * m + i] = dom ? 1 : 0;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    int count = 0;
    for (std::size_t r = 0; r < m; ++r) count += lay.ind[r * m + i];
    lay.edf[i] = static_cast<double>(count) / static_cast<double>(m);
  }
  return lay;
}

ReplicatePath reduce_replicate(const LearningLayout& lay,
                               const MonitorConfig& cfg,
                               std::span<const double> xi) {
  const std::size_t m = cfg.m;
  const std::size_t mp = rescaled_clock(m, cfg.n);
  if (mp < 2) throw std::invalid_argument("learning sample too small for horizon");
  const std::size_t J = mp * cfg.n / m;  // floor(m' (T+1)), T+1 = n/m

  // hat B at the grid steps: bhat[(j - mp) * m + i] = hat B(j/m', X_i)
  const double inv_sqrt_mp = 1.0 / std::sqrt(static_cast<double>(mp));
  std::vector<double> cum(m, 0.0);  // sum_{r<=j} xi_r 1(X_r <= X_i)
  double xi_cum = 0.0;
  std::vector<double> bhat((J - mp + 1) * m);
  for (std::size_t j = 1; j <= J; ++j) {
    const double x = xi[j - 1];
    xi_cum += x;
    const std::uint8_t* row = lay.ind.data() + (j - 1) * m;
    for (std::size_t i = 0; i < m; ++i) cum[i] += x * row[i];
    if (j >= mp) {
      double* out = bhat.data() + (j - mp) * m;
      for (std::size_t i = 0; i < m; ++i)
        out[i] = (cum[i] - xi_cum * lay.edf[i]) * inv_sqrt_mp;
    }
  }

  ReplicatePath path;
  path.m_prime = mp;
  path.values.assign(J - mp + 1, 0.0);
  const double mpd = static_cast<double>(mp);
  for (std::size_t jt = mp + 1; jt <= J; ++jt) {
    const double lt = static_cast<double>(jt) / mpd;
    const double* bt = bhat.data() + (jt - mp) * m;
    double value = 0.0;
    for (std::size_t js = mp; js <= jt - 1; ++js) {
      const double ls = static_cast<double>(js) / mpd;
      const double q = weight_q(ls, lt, cfg.gamma, cfg.delta);
      const double a = lt / q;
      const double b = ls / q;
      const double* bs = bhat.data() + (js - mp) * m;
      switch (cfg.detector) {
        case DetectorKind::R: {
          double ma = 0.0;
          for (std::size_t i = 0; i < jt; ++i)
            ma = std::max(ma, std::fabs(a * bs[i] - b * bt[i]));
          value = std::max(value, ma);
          break;
        }
        case DetectorKind::S:
        case DetectorKind::T: {
          double ss = 0.0;
          for (std::size_t i = 0; i < jt; ++i) {
            const double g = a * bs[i] - b * bt[i];
            ss += g * g;
          }
          ss /= static_cast<double>(jt);
          if (cfg.detector == DetectorKind::S)
            value = std::max(value, ss);
          else
            value += ss;
          break;
        }
        default:
          throw std::invalid_argument(
              "multiplier replicates are defined for the R, S and T detectors only");
      }
    }
    if (cfg.detector == DetectorKind::T) value /= mpd;
    path.values[jt - mp] = value;
  }
  return path;
}

}  // namespace

std::vector<ReplicatePath> replicate_paths(const ObservationMatrix& learning,
                                           const MonitorConfig& cfg,
                                           const MultiplierConfig& mult) {
  if (learning.rows() != cfg.m)
    throw std::invalid_argument("learning sample must have m rows");
  const std::size_t ell = estimate_bandwidth(learning, mult);
  const LearningLayout lay = layout_learning(learning);
  std::vector<ReplicatePath> out;
  out.reserve(mult.B);
  for (std::size_t b = 0; b < mult.B; ++b) {
    const std::vector<double> xi = gen_multipliers(cfg.m, ell, mult.seed, b);
    out.push_back(reduce_replicate(lay, cfg, xi));
  }
  return out;
}

ReplicatePath replicate_path_with_multipliers(const ObservationMatrix& learning,
                                              const MonitorConfig& cfg,
                                              std::span<const double> xi) {
  if (learning.rows() != cfg.m)
    throw std::invalid_argument("learning sample must have m rows");
  if (xi.size() != cfg.m)
    throw std::invalid_argument("need one multiplier per learning observation");
  return reduce_replicate(layout_learning(learning), cfg, xi);
}

}  // namespace seqcpd
