#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "resir/bench.hpp"
#include "resir/densities.hpp"
#include "resir/error.hpp"

using namespace resir;

namespace {

ExperimentConfig beta_cell(ResampleScheme scheme, std::size_t K, std::uint64_t seed) {
  ExperimentConfig config;
  config.target = make_beta_target(2.0, 3.0);
  config.proposal = make_uniform_proposal(0.0, 1.0);
  config.pool_size = 2000;
  config.resample_size = 200;
  config.replications = K;
  config.scheme = scheme;
  config.seed = seed;
  return config;
}

} // namespace

TEST_CASE("estimate_mean") {
  PointBatch constant(3);
  for (int i = 0; i < 5; ++i) constant.append(std::array<double, 3>{2.5, -1.0, 0.0});
  CHECK(estimate_mean(constant) == std::vector<double>{2.5, -1.0, 0.0});

  PointBatch pair(1);
  pair.append(std::array<double, 1>{1.0});
  pair.append(std::array<double, 1>{3.0});
  CHECK(estimate_mean(pair) == std::vector<double>{2.0});

  PointBatch planar(2);
  planar.append(std::array<double, 2>{0.0, 1.0});
  planar.append(std::array<double, 2>{2.0, 3.0});
  planar.append(std::array<double, 2>{4.0, 5.0});
  CHECK(estimate_mean(planar) == std::vector<double>{2.0, 3.0});

  CHECK_THROWS_AS((void)estimate_mean(PointBatch(2)), Error);
}

TEST_CASE("mean squared error, with and without a fixed center") {
  const std::vector<std::vector<double>> identical{{1.5}, {1.5}, {1.5}};
  CHECK(mean_squared_error(identical) == std::vector<double>{0.0});

  const std::vector<std::vector<double>> pair{{1.0}, {3.0}};
  CHECK(mean_squared_error(pair) == std::vector<double>{1.0});
  CHECK(mean_squared_error(pair, std::vector<double>{0.0}) == std::vector<double>{5.0});

  CHECK_THROWS_AS((void)mean_squared_error(pair, std::vector<double>{0.0, 0.0}), Error);
  CHECK_THROWS_AS(
      (void)mean_squared_error(std::vector<std::vector<double>>{{1.0}, {1.0, 2.0}}),
      Error);
}

TEST_CASE("overall MSE sums the components") {
  CHECK(overall_mse(std::array<double, 4>{0, 0, 0, 0}) == 0.0);
  CHECK(overall_mse(std::array<double, 2>{1.0, 2.0}) == 3.0);
  // the published multivariate table's first row sums to its OMSE column
  CHECK(overall_mse(std::array<double, 4>{0.008897, 0.006810, 0.01227, 0.01561}) ==
        doctest::Approx(0.04359).epsilon(2e-4));
}

TEST_CASE("a single replication equals the manual chain with child stream 1") {
  const auto config = beta_cell(ResampleScheme::LatinHypercube, 1, 77);
  const auto estimates = run_replications(config);
  REQUIRE(estimates.size() == 1);

  RngStream manual = RngStream(77).child(1);
  const auto pool = build_pool(config.target, config.proposal, config.pool_size, manual);
  const auto points = resample(pool, config.scheme, config.resample_size, manual);
  CHECK(estimates[0] == estimate_mean(points)); // bit-identical
}

TEST_CASE("pool construction consumes the stream identically across schemes") {
  const auto config = beta_cell(ResampleScheme::Plain, 1, 31);
  RngStream a = RngStream(31).child(1);
  RngStream b = RngStream(31).child(1);
  const auto pool_a = build_pool(config.target, config.proposal, config.pool_size, a);
  const auto pool_b = build_pool(config.target, config.proposal, config.pool_size, b);
  CHECK(pool_a.samples().data() == pool_b.samples().data());
  CHECK(a.next_u64() == b.next_u64()); // stream positions agree afterwards
}

TEST_CASE("replicate k is bit-identical alone or in a batch") {
  auto config = beta_cell(ResampleScheme::Antithetic, 8, 123);
  const auto batch = run_replications(config);

  config.replications = 1;
  for (std::size_t k = 1; k <= 8; ++k) {
    RngStream stream = RngStream(123).child(k);
    const auto pool =
        build_pool(config.target, config.proposal, config.pool_size, stream);
    const auto points = resample(pool, config.scheme, config.resample_size, stream);
    CHECK(batch[k - 1] == estimate_mean(points));
  }
}

TEST_CASE("parallel and serial runs produce identical estimates") {
  const auto config = beta_cell(ResampleScheme::Plain, 12, 5);
  setenv("RESIR_THREADS", "1", 1);
  const auto serial = run_replications(config);
  setenv("RESIR_THREADS", "3", 1);
  const auto parallel = run_replications(config);
  unsetenv("RESIR_THREADS");
  CHECK(serial == parallel);
}

TEST_CASE("identical config and seed give a bit-identical report") {
  const auto config = beta_cell(ResampleScheme::LatinHypercube, 6, 2023);
  const auto a = run_bench(config);
  const auto b = run_bench(config);
  CHECK(a.estimates == b.estimates);
  CHECK(a.mse == b.mse);
  CHECK(a.omse == b.omse);
  CHECK(a.omse == doctest::Approx(overall_mse(a.mse)).epsilon(1e-12));
}

TEST_CASE("estimator is unbiased at a symmetric target") {
  ExperimentConfig config;
  config.target = make_normal_target(0.0, 1.0);
  config.proposal = make_mvnormal_proposal(Eigen::VectorXd::Zero(1),
                                           Eigen::MatrixXd::Identity(1, 1));
  config.pool_size = 4000;
  config.resample_size = 1000;
  config.replications = 200;
  config.scheme = ResampleScheme::Plain;
  config.seed = 404;
  const auto estimates = run_replications(config);

  std::vector<double> firsts(estimates.size());
  for (std::size_t k = 0; k < estimates.size(); ++k) firsts[k] = estimates[k][0];
  const double grand = oracles::mean(firsts);
  const double se = oracles::sample_sd(firsts) / std::sqrt(static_cast<double>(firsts.size()));
  CHECK(std::fabs(grand) <= 3.0 * se);
}

TEST_CASE("degenerate pools surface the failing replicate") {
  ExperimentConfig config;
  config.target = UnnormalizedTarget{
      1, [](std::span<const double>) { return -std::numeric_limits<double>::infinity(); }};
  config.proposal = make_uniform_proposal(0.0, 1.0);
  config.pool_size = 4;
  config.resample_size = 2;
  config.replications = 3;
  config.scheme = ResampleScheme::Plain;
  config.seed = 0;
  try {
    (void)run_replications(config);
    FAIL("expected a degenerate-pool error");
  } catch (const Error& e) {
    CHECK(e.code() == "degenerate-pool");
    CHECK(std::string(e.what()).find("replicate 1") != std::string::npos);
  }
}

TEST_CASE("invalid sizes are rejected") {
  auto config = beta_cell(ResampleScheme::Plain, 1, 0);
  config.resample_size = config.pool_size + 1;
  CHECK_THROWS_AS((void)run_replications(config), Error);
  config.resample_size = 0;
  CHECK_THROWS_AS((void)run_replications(config), Error);
}
