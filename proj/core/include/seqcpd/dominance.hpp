#ifndef SEQCPD_DOMINANCE_HPP
#define SEQCPD_DOMINANCE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "seqcpd/types.hpp"

namespace seqcpd {

/// Incremental pairwise-dominance structure behind all empirical-d.f.
/// evaluations.  For observations X_1,...,X_k it keeps, per evaluation
/// point X_i, the prefix counts over r of the componentwise indicator
/// 1(X_r <= X_i), so that F_{j:k}(X_i) is available in O(1) and one new
/// observation costs O(k d).
class DominanceState {
 public:
  DominanceState() = default;
  explicit DominanceState(const ObservationMatrix& x);

  /// Ingest one observation of dimension dim (the dimension is fixed by
  /// the first observation).  Equivalent to rebuilding from scratch.
  void extend(std::span<const double> x);

  /// Value-returning variant of extend.
  DominanceState extended(std::span<const double> x) const;

  std::size_t size() const { return k_; }
  std::size_t dim() const { return dim_; }
  const ObservationMatrix& observations() const { return obs_; }

  /// #{r' in 1..r : X_{r'} <= X_i componentwise}; prefix(i, 0) == 0.
  /// Indices are 1-based.
  int prefix(std::size_t i, std::size_t r) const { return prefix_[i - 1][r]; }

  /// F_{j:k}(X_i); returns 0 when j > k.  Requires k <= size().
  double ecdf(std::size_t j, std::size_t k, std::size_t i) const;

 private:
  std::size_t k_ = 0;
  std::size_t dim_ = 0;
  ObservationMatrix obs_;
  std::vector<std::vector<int>> prefix_;  // prefix_[i][r], r in 0..k_
};

}  // namespace seqcpd

#endif  // SEQCPD_DOMINANCE_HPP
