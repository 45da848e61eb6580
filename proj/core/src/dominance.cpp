#include "seqcpd/dominance.hpp"

#include <cmath>
#include <stdexcept>

namespace seqcpd {

namespace {

bool dominated_by(std::span<const double> a, std::span<const double> b) {
  // a <= b componentwise, weak inequality
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] > b[c]) return false;
  return true;
}

}  // namespace

DominanceState::DominanceState(const ObservationMatrix& x) {
  for (std::size_t i = 0; i < x.rows(); ++i) extend(x.row(i));
}

void DominanceState::extend(std::span<const double> x) {
  if (k_ == 0) {
    dim_ = x.size();
  } else if (x.size() != dim_) {
    throw std::invalid_argument("observation dimension mismatch");
  }
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite observation");

  // existing evaluation points gain one prefix entry
  for (std::size_t i = 0; i < k_; ++i) {
    const int inc = dominated_by(x, obs_.row(i)) ? 1 : 0;
    prefix_[i].push_back(prefix_[i].back() + inc);
  }
  // prefix row of the new point over all r = 1..k+1
  std::vector<int> row(k_ + 2, 0);
  for (std::size_t r = 0; r < k_; ++r)
    row[r + 1] = row[r] + (dominated_by(obs_.row(r), x) ? 1 : 0);
  row[k_ + 1] = row[k_] + 1;  // a point dominates itself
  prefix_.push_back(std::move(row));
  obs_.append_row(x);
  ++k_;
}

DominanceState DominanceState::extended(std::span<const double> x) const {
  DominanceState out(*this);
  out.extend(x);
  return out;
}

double DominanceState::ecdf(std::size_t j, std::size_t k, std::size_t i) const {
  if (i < 1 || i > k_) throw std::out_of_range("evaluation index out of range");
  if (j < 1) throw std::out_of_range("stretch start out of range");
  if (j > k) return 0.0;  // empty stretch
  if (k > k_) throw std::out_of_range("index beyond ingested data");
  return static_cast<double>(prefix(i, k) - prefix(i, j - 1)) /
         static_cast<double>(k - j + 1);
}

}  // namespace seqcpd
