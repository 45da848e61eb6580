#include <stdexcept>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "seqcpd/csv.hpp"
#include "seqcpd/json_io.hpp"
#include "seqcpd/quantile.hpp"
#include "seqcpd/rng.hpp"
#include "seqcpd/threshold.hpp"
#include "seqcpd/types.hpp"

using namespace seqcpd;

TEST_CASE("empirical quantile basics") {
  const std::vector<double> v{1, 2, 3, 4};
  CHECK(quantile(v, 0.5) == 2.0);
  const std::vector<double> one{7};
  CHECK(quantile(one, 1.0) == 7.0);
  CHECK(quantile(v, 0.0) == 1.0);  // y = 0 -> minimum
  CHECK_THROWS_AS(quantile(std::vector<double>{}, 0.5), std::invalid_argument);
}

TEST_CASE("quantile of normal draws near the exact 95% point") {
  std::vector<double> v(1000);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = counter_normal(42, 0, i);
  CHECK(std::fabs(quantile(v, 0.95) - 1.6449) < 0.15);
}

TEST_CASE("quantile matches sort-and-scan oracle") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> v(1 + gen() % 40);
    for (double& x : v) x = unif(gen);
    const double y = unif(gen);
    CHECK(quantile(v, y) == oracle::quantile(v, y));
  }
}

TEST_CASE("interval boundaries") {
  CHECK(interval_boundaries(50, 100, 1) == std::vector<std::size_t>{50, 100});
  CHECK(interval_boundaries(50, 100, 2) == std::vector<std::size_t>{50, 75, 100});
  CHECK(interval_boundaries(50, 100, 4) ==
        std::vector<std::size_t>{50, 63, 75, 88, 100});
}

TEST_CASE("per-step false-alarm probability") {
  CHECK(xi_from_alpha(0.05, 1) == 0.05);
  for (std::size_t steps : {2, 7, 50}) {
    const double xi = xi_from_alpha(0.05, steps);
    CHECK(std::fabs(std::pow(1.0 - xi, static_cast<double>(steps)) - 0.95) <
          1e-12);
  }
  CHECK(std::fabs(xi_from_alpha(0.05, 50) - 0.001) < 5e-5);
}

TEST_CASE("config validation") {
  MonitorConfig cfg;
  cfg.m = 50;
  cfg.n = 100;
  CHECK_NOTHROW(cfg.validate());
  cfg.p = 51;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.p = 1;
  cfg.gamma = 0.6;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.gamma = 0.0;
  cfg.n = 50;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("threshold interval lookup is right-closed") {
  ThresholdFunction tf;
  tf.boundaries = {50, 75, 100};
  tf.levels = {1.0, 2.0};
  tf.order = 0.95;
  tf.validate();
  CHECK(tf.interval_of(51) == 1);
  CHECK(tf.interval_of(75) == 1);
  CHECK(tf.interval_of(76) == 2);
  CHECK(tf.interval_of(100) == 2);
  CHECK(tf.level_at(75) == 1.0);
  CHECK(tf.level_at(76) == 2.0);
}

TEST_CASE("counter rng streams are reproducible and disjoint") {
  CHECK(counter_uniform(1, 2, 3) == counter_uniform(1, 2, 3));
  CHECK(counter_uniform(1, 2, 3) != counter_uniform(1, 2, 4));
  CHECK(counter_uniform(1, 2, 3) != counter_uniform(1, 3, 3));
  CHECK(derive_seed(9, 1) != derive_seed(9, 2));
  const double u = counter_uniform(7, 0, 0);
  CHECK(u > 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("normal quantile inverts the cdf") {
  for (double u : {0.001, 0.025, 0.3, 0.5, 0.975, 0.999}) {
    CHECK(std::fabs(normal_cdf(normal_quantile(u)) - u) < 1e-12);
  }
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(std::fabs(normal_quantile(0.975) - 1.959963984540054) < 1e-12);
}

TEST_CASE("csv round trip") {
  const char* path = "test_roundtrip.csv";
  ObservationMatrix x(17, 3);
  std::mt19937_64 gen(11);
  std::normal_distribution<double> normal;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = normal(gen);
  write_csv(x, path);
  const ObservationMatrix y = read_csv(path);
  REQUIRE(y.rows() == x.rows());
  REQUIRE(y.cols() == x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) CHECK(y(i, j) == x(i, j));
  std::remove(path);
}

TEST_CASE("csv parsing and errors") {
  const char* path = "test_parse.csv";
  {
    std::FILE* f = std::fopen(path, "w");
    std::fputs("a,b\n1.5,2.0\n3.0,4.0\n", f);
    std::fclose(f);
  }
  const ObservationMatrix x = read_csv(path);  // header skipped
  REQUIRE(x.rows() == 2);
  REQUIRE(x.cols() == 2);
  CHECK(x(0, 0) == 1.5);
  CHECK(x(1, 1) == 4.0);
  {
    std::FILE* f = std::fopen(path, "w");
    std::fputs("1.5,2.0\n3.0\n", f);
    std::fclose(f);
  }
  CHECK_THROWS_WITH_AS(read_csv(path), doctest::Contains("line 2"),
                       std::runtime_error);
  {
    std::FILE* f = std::fopen(path, "w");
    std::fputs("1.0,2.0\n3.0,oops\n", f);
    std::fclose(f);
  }
  CHECK_THROWS_WITH_AS(read_csv(path), doctest::Contains("line 2"),
                       std::runtime_error);
  std::remove(path);
}

TEST_CASE("json round trips") {
  MonitorConfig cfg;
  cfg.m = 60;
  cfg.n = 130;
  cfg.alpha = 0.1;
  cfg.p = 4;
  cfg.detector = DetectorKind::S;
  cfg.gamma = 0.25;
  cfg.dim = 2;
  const MonitorConfig back = monitor_config_from_json(to_json(cfg));
  CHECK(back.m == cfg.m);
  CHECK(back.n == cfg.n);
  CHECK(back.alpha == cfg.alpha);
  CHECK(back.p == cfg.p);
  CHECK(back.detector == cfg.detector);
  CHECK(back.gamma == cfg.gamma);
  CHECK(back.dim == cfg.dim);

  ThresholdArtifact art;
  art.fn.boundaries = {60, 95, 130};
  art.fn.levels = {1.5, 2.5};
  art.fn.order = 0.95;
  art.mode = "bootstrap";
  art.cfg = cfg;
  art.cfg.p = 2;
  art.seed = 77;
  art.replicates = 500;
  art.multiplier = MultiplierConfig{};
  const ThresholdArtifact aback = threshold_artifact_from_json(to_json(art));
  CHECK(aback.fn.boundaries == art.fn.boundaries);
  CHECK(aback.fn.levels == art.fn.levels);
  CHECK(aback.mode == "bootstrap");
  CHECK(aback.multiplier.has_value());

  Scenario scn;
  scn.null_model = Ar1{0.3};
  scn.m = 50;
  scn.n = 100;
  scn.change = Scenario::Change{70, IidNormal{1.0, 2.0, 1}};
  const Scenario sback = scenario_from_json(to_json(scn));
  CHECK(std::get<Ar1>(sback.null_model).beta == 0.3);
  REQUIRE(sback.change.has_value());
  CHECK(sback.change->at == 70);
  CHECK(std::get<IidNormal>(sback.change->post_model).var == 2.0);
}

TEST_CASE("detector kind names") {
  CHECK(to_string(DetectorKind::Q) == "Q");
  CHECK(detector_kind_from_string("R") == DetectorKind::R);
  CHECK_THROWS_AS(detector_kind_from_string("Z"), std::invalid_argument);
}
