#ifndef SEQCPD_MULTIPLIER_HPP
#define SEQCPD_MULTIPLIER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqcpd/types.hpp"

namespace seqcpd {

enum class KernelKind { Parzen };
enum class BandwidthRule { Fixed, PowerRule };

/// Settings of the dependent multiplier bootstrap.
struct MultiplierConfig {
  std::size_t B = 2000;
  BandwidthRule ell_rule = BandwidthRule::PowerRule;
  std::size_t ell = 1;  // used when ell_rule == Fixed
  KernelKind kernel = KernelKind::Parzen;
  std::uint64_t seed = 0;
};

/// Parzen's kernel: 1 - 6x^2 + 6|x|^3 on |x| <= 1/2, 2(1-|x|)^3 on
/// 1/2 < |x| <= 1, 0 elsewhere.
double parzen_kernel(double x);

/// Bandwidth ell for a learning sample of m rows: round(m^{1/3}) under
/// PowerRule (at least 1), the configured value under Fixed.
std::size_t estimate_bandwidth(const ObservationMatrix& learning,
                               const MultiplierConfig& cfg);

/// Moving-average weights w_{-h},...,w_h with half-width h = (ell-1)/2,
/// w_j proportional to parzen_kernel(j / (h + 0.5)) and normalized so
/// that sum w_j^2 = 1.  ell = 1 degenerates to the single weight 1.
std::vector<double> multiplier_weights(std::size_t ell);

/// Correlation function phi(h) = sum_j w_j w_{j+h} induced by a weight
/// vector; entry h, h = 0..len(w)-1.
std::vector<double> induced_correlation(std::span<const double> w);

/// One dependent multiplier sequence xi_1,...,xi_m: a weighted moving
/// average of standard normals keyed on (seed, replicate_index, position).
/// Mean 0 and variance 1 hold exactly by construction.
std::vector<double> gen_multipliers(std::size_t m, std::size_t ell,
                                    std::uint64_t seed,
                                    std::uint64_t replicate_index);

/// Replicate detector values on the rescaled step grid j = m'..J,
/// J = floor(m' n / m); values[j - m'] corresponds to t = j / m'.
struct ReplicatePath {
  std::size_t m_prime = 0;
  std::vector<double> values;
};

/// Rescaled clock m' = floor(m^2 / n).
std::size_t rescaled_clock(std::size_t m, std::size_t n);

/// B dependent multiplier replicates of the detector path, built from the
/// learning sample (cfg.m rows) under the rescaled clock.  Only the R, S
/// and T kinds have multiplier replicates.
std::vector<ReplicatePath> replicate_paths(const ObservationMatrix& learning,
                                           const MonitorConfig& cfg,
                                           const MultiplierConfig& mult);

/// Test hook: one replicate with externally supplied multipliers
/// xi_1..xi_m.
ReplicatePath replicate_path_with_multipliers(const ObservationMatrix& learning,
                                              const MonitorConfig& cfg,
                                              std::span<const double> xi);

}  // namespace seqcpd

#endif  // SEQCPD_MULTIPLIER_HPP
