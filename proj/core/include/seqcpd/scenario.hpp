#ifndef SEQCPD_SCENARIO_HPP
#define SEQCPD_SCENARIO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "seqcpd/types.hpp"

namespace seqcpd {

struct IidUniform {
  std::size_t dim = 1;
};

struct IidNormal {
  double mean = 0.0;
  double var = 1.0;
  std::size_t dim = 1;
};

struct IidGamma {
  double shape = 1.0;
  double rate = 1.0;
};

/// X_i = beta X_{i-1} + eps_i with standard normal innovations.
struct Ar1 {
  double beta = 0.0;
};

/// sigma^2_i = omega + alpha X^2_{i-1} + beta sigma^2_{i-1}, X_i = sigma_i eps_i.
struct Garch11 {
  double omega = 0.012;
  double beta = 0.919;
  double alpha = 0.072;
};

/// d-variate Gaussian with pairwise correlation rho = sin(pi tau / 2),
/// transformed to uniform margins.
struct NormalCopula {
  double tau = 0.0;
  std::size_t dim = 2;
};

using ModelSpec =
    std::variant<IidUniform, IidNormal, IidGamma, Ar1, Garch11, NormalCopula>;

std::size_t model_dim(const ModelSpec& model);

/// Data-generating scenario: n rows from null_model, optionally replaced
/// from change->post_model after index change->at.
struct Scenario {
  ModelSpec null_model;
  std::size_t m = 0;
  std::size_t n = 0;

  struct Change {
    std::size_t at = 0;  // k*; rows at+1..n come from the post model
    ModelSpec post_model;
  };
  std::optional<Change> change;

  void validate() const;
};

/// Generates the n x d observation matrix of a scenario; deterministic in
/// the seed.  Serially dependent post-change stretches restart with their
/// own burn-in.
ObservationMatrix generate(const Scenario& scn, std::uint64_t seed);

}  // namespace seqcpd

#endif  // SEQCPD_SCENARIO_HPP
