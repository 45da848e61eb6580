#include "seqcpd/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seqcpd {

std::string to_string(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::R: return "R";
    case DetectorKind::S: return "S";
    case DetectorKind::T: return "T";
    case DetectorKind::P: return "P";
    case DetectorKind::Q: return "Q";
  }
  throw std::logic_error("unknown detector kind");
}

DetectorKind detector_kind_from_string(const std::string& name) {
  if (name == "R") return DetectorKind::R;
  if (name == "S") return DetectorKind::S;
  if (name == "T") return DetectorKind::T;
  if (name == "P") return DetectorKind::P;
  if (name == "Q") return DetectorKind::Q;
  throw std::invalid_argument("unknown detector kind: " + name);
}

void MonitorConfig::validate() const {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n <= m) throw std::invalid_argument("n must be > m");
  if (!(alpha > 0.0 && alpha < 0.5))
    throw std::invalid_argument("alpha must lie in (0, 1/2)");
  if (p < 1 || p > n - m) throw std::invalid_argument("too many steps");
  if (!(gamma >= 0.0 && gamma <= 0.5))
    throw std::invalid_argument("gamma must lie in [0, 1/2]");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
}

void ObservationMatrix::append_row(std::span<const double> x) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = x.size();
  } else if (x.size() != cols_) {
    throw std::invalid_argument("row dimension mismatch");
  }
  data_.insert(data_.end(), x.begin(), x.end());
  ++rows_;
}

ObservationMatrix ObservationMatrix::slice_rows(std::size_t first, std::size_t last) const {
  if (first > last || last > rows_) throw std::out_of_range("bad row range");
  ObservationMatrix out(last - first, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>(last * cols_),
            out.data_.begin());
  return out;
}

bool ObservationMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

bool has_within_column_ties(const ObservationMatrix& x) {
  for (std::size_t j = 0; j < x.cols(); ++j) {
    std::vector<double> col(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i) col[i] = x(i, j);
    std::sort(col.begin(), col.end());
    if (std::adjacent_find(col.begin(), col.end()) != col.end()) return true;
  }
  return false;
}

std::size_t ThresholdFunction::interval_of(std::size_t k) const {
  if (boundaries.empty() || k <= boundaries.front() || k > boundaries.back())
    throw std::out_of_range("index outside monitoring period");
  auto it = std::lower_bound(boundaries.begin() + 1, boundaries.end(), k);
  return static_cast<std::size_t>(it - boundaries.begin());
}

void ThresholdFunction::validate() const {
  if (boundaries.size() != levels.size() + 1 || levels.empty())
    throw std::invalid_argument("threshold function: inconsistent sizes");
  for (std::size_t i = 1; i < boundaries.size(); ++i)
    if (boundaries[i] <= boundaries[i - 1])
      throw std::invalid_argument("threshold boundaries not increasing");
  for (double g : levels)
    if (!(g > 0.0)) throw std::invalid_argument("threshold levels must be > 0");
}

}  // namespace seqcpd
