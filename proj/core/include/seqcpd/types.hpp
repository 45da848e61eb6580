#ifndef SEQCPD_TYPES_HPP
#define SEQCPD_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace seqcpd {

/// The five detector statistics.
enum class DetectorKind { R, S, T, P, Q };

std::string to_string(DetectorKind kind);
DetectorKind detector_kind_from_string(const std::string& name);

/// Configuration of a closed-end monitoring run.
///
/// The learning sample has size m, monitoring stops after observation n,
/// alpha is the overall probability of false alarm and p the number of
/// steps of the piecewise-constant threshold function.  gamma and delta
/// parametrize the weight function q(s,t) = max{s^gamma (t-s)^gamma, delta}.
struct MonitorConfig {
  std::size_t m = 0;
  std::size_t n = 0;
  double alpha = 0.05;
  std::size_t p = 1;
  DetectorKind detector = DetectorKind::T;
  double gamma = 0.0;
  double delta = 1e-4;
  std::size_t dim = 1;

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;
};

/// Row-major matrix of observations; rows are time-ordered, columns are
/// the d components.
class ObservationMatrix {
 public:
  ObservationMatrix() = default;
  ObservationMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Row i as a contiguous span of length cols().
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_.data() + i * cols_, cols_);
  }

  void append_row(std::span<const double> x);

  /// Submatrix made of rows [first, last).
  ObservationMatrix slice_rows(std::size_t first, std::size_t last) const;

  /// All entries finite?
  bool all_finite() const;

  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// True if some column of the matrix contains two equal values.  Detector
/// arithmetic assumes continuous data; ties break the margin-free property.
bool has_within_column_ties(const ObservationMatrix& x);

/// Piecewise-constant decision boundary.  boundaries holds the p+1
/// monitoring indices m = b_0 < b_1 < ... < b_p = n; interval i covers
/// observation indices {b_{i-1}+1, ..., b_i} (right-closed) and carries
/// the single level levels[i-1].
struct ThresholdFunction {
  std::vector<std::size_t> boundaries;
  std::vector<double> levels;
  double order = 0.0;

  std::size_t steps() const { return levels.size(); }

  /// Index (1-based) of the interval containing observation index k.
  std::size_t interval_of(std::size_t k) const;

  /// Threshold level at observation index k.
  double level_at(std::size_t k) const { return levels[interval_of(k) - 1]; }

  void validate() const;
};

}  // namespace seqcpd

#endif  // SEQCPD_TYPES_HPP
