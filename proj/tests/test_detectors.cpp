#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "seqcpd/detectors.hpp"
#include "seqcpd/dominance.hpp"
#include "seqcpd/types.hpp"

using namespace seqcpd;

namespace {

ObservationMatrix random_matrix(std::mt19937_64& gen, std::size_t rows,
                                std::size_t cols) {
  ObservationMatrix x(rows, cols);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) x(i, j) = unif(gen);
  return x;
}

constexpr DetectorKind kAllKinds[] = {DetectorKind::R, DetectorKind::S,
                                      DetectorKind::T, DetectorKind::P,
                                      DetectorKind::Q};

}  // namespace

TEST_CASE("weight function") {
  CHECK(weight_q(1.3, 1.9, 0.0, 1e-4) == 1.0);
  CHECK(weight_q(2.0, 2.0, 0.5, 1e-4) == 1e-4);
  CHECK(weight_q(1.0, 2.0, 0.5, 1e-4) == 1.0);
  CHECK_THROWS_AS(weight_q(2.0, 1.0, 0.0, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(weight_q(-0.1, 1.0, 0.0, 1e-4), std::invalid_argument);
}

TEST_CASE("empirical df evaluation") {
  ObservationMatrix x(2, 1);
  x(0, 0) = 0.0;
  x(1, 0) = 1.0;
  DominanceState s(x);
  CHECK(s.ecdf(1, 2, 1) == 0.5);
  CHECK(s.ecdf(3, 2, 1) == 0.0);  // j > k
  CHECK_THROWS_AS(s.ecdf(1, 3, 1), std::out_of_range);

  std::mt19937_64 gen(17);
  const ObservationMatrix y = random_matrix(gen, 5, 2);
  DominanceState sy(y);
  CHECK(sy.ecdf(2, 4, 3) == oracle::ecdf(y, 2, 4, y.row(2)));
}

TEST_CASE("dominance structure invariants") {
  std::mt19937_64 gen(23);
  const ObservationMatrix x = random_matrix(gen, 9, 3);
  DominanceState batch(x);
  DominanceState inc;
  for (std::size_t i = 0; i < x.rows(); ++i) inc.extend(x.row(i));
  REQUIRE(inc.size() == batch.size());
  for (std::size_t i = 1; i <= x.rows(); ++i) {
    // self-dominance and monotone prefixes
    CHECK(batch.prefix(i, i) - batch.prefix(i, i - 1) == 1);
    for (std::size_t r = 1; r <= x.rows(); ++r) {
      CHECK(batch.prefix(i, r) >= batch.prefix(i, r - 1));
      CHECK(inc.prefix(i, r) == batch.prefix(i, r));
    }
  }
}

TEST_CASE("detector hand-computed cases") {
  // m=1, k=2, X=[0;1], R, gamma=0 -> 1
  ObservationMatrix x(2, 1);
  x(0, 0) = 0.0;
  x(1, 0) = 1.0;
  DominanceState s(x);
  MonitorConfig cfg;
  cfg.m = 1;
  cfg.n = 2;
  cfg.detector = DetectorKind::R;
  CHECK(compute_detector(s, cfg, 2) == 1.0);
  // k = m -> before monitoring starts
  CHECK_THROWS_AS(compute_detector(s, cfg, 1), std::invalid_argument);
  // path convention: first value is 0
  const DetectorPath path = detector_path(s, cfg);
  CHECK(path.values[0] == 0.0);
  CHECK(path.values[1] == 1.0);
}

TEST_CASE("detectors match the naive oracle") {
  std::mt19937_64 gen(31);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t m = 2 + gen() % 5;
    const std::size_t n = m + 1 + gen() % (12 - m);
    const std::size_t d = 1 + gen() % 3;
    const ObservationMatrix x = random_matrix(gen, n, d);
    DominanceState s(x);
    MonitorConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.dim = d;
    for (DetectorKind kind : kAllKinds) {
      cfg.detector = kind;
      for (double gamma : {0.0, 0.25, 0.5}) {
        cfg.gamma = gamma;
        for (std::size_t k = m + 1; k <= n; ++k) {
          CHECK(std::fabs(compute_detector(s, cfg, k) -
                          oracle::detector(x, cfg, k)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("structural detector properties") {
  std::mt19937_64 gen(37);
  const std::size_t m = 6, n = 14;
  const ObservationMatrix x = random_matrix(gen, n, 2);
  DominanceState s(x);
  MonitorConfig cfg;
  cfg.m = m;
  cfg.n = n;
  cfg.dim = 2;
  for (std::size_t k = m + 1; k <= n; ++k) {
    for (DetectorKind kind : kAllKinds) {
      cfg.detector = kind;
      CHECK(compute_detector(s, cfg, k) >= 0.0);
    }
    // m T(k) <= (k - m) S(k): T is the mean of the S terms
    cfg.detector = DetectorKind::T;
    const double t = compute_detector(s, cfg, k);
    cfg.detector = DetectorKind::S;
    const double sv = compute_detector(s, cfg, k);
    CHECK(static_cast<double>(m) * t <=
          static_cast<double>(k - m) * sv + 1e-12);
  }
}

TEST_CASE("margin invariance of detector values") {
  std::mt19937_64 gen(41);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t m = 4, n = 11, d = 2;
    const ObservationMatrix x = random_matrix(gen, n, d);
    ObservationMatrix y = x;
    for (std::size_t i = 0; i < n; ++i) {
      y(i, 0) = std::exp(x(i, 0));
      y(i, 1) = x(i, 1) * x(i, 1) * x(i, 1) + x(i, 1);
    }
    DominanceState sx(x), sy(y);
    MonitorConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.dim = d;
    for (DetectorKind kind : kAllKinds) {
      cfg.detector = kind;
      cfg.gamma = 0.25;
      for (std::size_t k = m + 1; k <= n; ++k) {
        CHECK(compute_detector(sx, cfg, k) == compute_detector(sy, cfg, k));
      }
    }
  }
}

TEST_CASE("change point estimation") {
  MonitorConfig cfg;
  cfg.m = 5;
  cfg.n = 10;
  // 5 zeros then 5 ones: argmax at j = 5 -> estimate 6
  ObservationMatrix x(10, 1);
  for (std::size_t i = 5; i < 10; ++i) x(i, 0) = 1.0;
  DominanceState s(x);
  CHECK(estimate_changepoint(s, cfg, 10) == 6);

  // constant data: objective identically 0, smallest-j tie-break -> m + 1
  ObservationMatrix c(10, 1);
  for (std::size_t i = 0; i < 10; ++i) c(i, 0) = 3.0;
  DominanceState sc(c);
  CHECK(estimate_changepoint(sc, cfg, 10) == cfg.m + 1);

  // random data: brute-force argmax over the same objective
  std::mt19937_64 gen(43);
  for (int rep = 0; rep < 10; ++rep) {
    const ObservationMatrix r = random_matrix(gen, 10, 1);
    DominanceState sr(r);
    double best = -1.0;
    std::size_t best_j = 0;
    for (std::size_t j = cfg.m; j <= 9; ++j) {
      double acc = 0.0;
      const double w = static_cast<double>(j) * static_cast<double>(10 - j) /
                       (5.0 * std::sqrt(5.0));
      for (std::size_t i = 1; i <= 10; ++i) {
        const double d =
            w * (oracle::ecdf(r, 1, j, r.row(i - 1)) -
                 oracle::ecdf(r, j + 1, 10, r.row(i - 1)));
        acc += d * d;
      }
      acc /= 10.0;
      if (acc > best) {
        best = acc;
        best_j = j;
      }
    }
    CHECK(estimate_changepoint(sr, cfg, 10) == best_j + 1);
  }
}

TEST_CASE("batch path evaluation equals per-config evaluation") {
  std::mt19937_64 gen(47);
  const std::size_t m = 5, n = 12;
  const ObservationMatrix x = random_matrix(gen, n, 1);
  DominanceState s(x);
  std::vector<DetectorSpec> specs;
  for (DetectorKind kind : kAllKinds)
    for (double gamma : {0.0, 0.5}) specs.push_back({kind, gamma});
  const auto batch = detector_paths_batch(s, m, n, specs, 1e-4);
  REQUIRE(batch.size() == specs.size());
  for (std::size_t sp = 0; sp < specs.size(); ++sp) {
    MonitorConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.detector = specs[sp].kind;
    cfg.gamma = specs[sp].gamma;
    const DetectorPath single = detector_path(s, cfg);
    REQUIRE(batch[sp].size() == single.values.size());
    for (std::size_t i = 0; i < single.values.size(); ++i)
      CHECK(batch[sp][i] == single.values[i]);
  }
}
