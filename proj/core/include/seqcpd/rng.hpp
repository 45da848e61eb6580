#ifndef SEQCPD_RNG_HPP
#define SEQCPD_RNG_HPP

#include <cstdint>

namespace seqcpd {

/// splitmix64 finalizer; used both as a hash and as the state update of
/// the counter-based streams below.
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed for a replicate/trial/path stream, derived from a master seed
/// and a stream index so that results do not depend on execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Uniform variate in (0,1) keyed on (seed, stream, position).
double counter_uniform(std::uint64_t seed, std::uint64_t stream,
                       std::uint64_t position);

/// Standard normal variate keyed on (seed, stream, position), via the
/// inverse normal c.d.f.
double counter_normal(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t position);

/// Quantile function of the standard normal distribution (Wichura's
/// algorithm AS 241, double precision).
double normal_quantile(double u);

/// Standard normal c.d.f.
double normal_cdf(double x);

}  // namespace seqcpd

#endif  // SEQCPD_RNG_HPP
