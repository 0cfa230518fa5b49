#include "resir/bench.hpp"

#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include "parallel.hpp"
#include "resir/error.hpp"
#include "resir/rng.hpp"

namespace resir {

std::vector<double> estimate_mean(const PointBatch& points) {
  if (points.size() == 0) throw_bad_parameter("estimate_mean: empty sample");
  const std::size_t d = points.dim();
  std::vector<double> mean(d, 0.0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto row = points[i];
    for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
  }
  const double n = static_cast<double>(points.size());
  for (auto& m : mean) m /= n;
  return mean;
}

unsigned worker_count(std::size_t jobs) {
  unsigned workers = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("RESIR_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested > 0) workers = static_cast<unsigned>(requested);
  }
  if (workers == 0) workers = 1;
  if (jobs < workers) workers = static_cast<unsigned>(jobs);
  return workers;
}

std::vector<std::vector<double>> run_replications(const ExperimentConfig& config) {
  if (config.pool_size < config.resample_size || config.resample_size == 0)
    throw_bad_parameter("need pool size >= resample size >= 1");
  if (config.replications == 0) throw_bad_parameter("need at least one replication");

  const RngStream master(config.seed);
  std::vector<std::vector<double>> estimates(config.replications);

  detail::parallel_replicates(config.replications, [&](std::size_t k) {
    try {
      RngStream stream = master.child(k);
      const auto pool = build_pool(config.target, config.proposal, config.pool_size, stream);
      const auto points = resample(pool, config.scheme, config.resample_size, stream);
      estimates[k - 1] = estimate_mean(points);
    } catch (const Error& e) {
      throw Error(e.code(), "replicate " + std::to_string(k) + ": " + e.what());
    }
  });
  return estimates;
}

std::vector<double> mean_squared_error(
    const std::vector<std::vector<double>>& estimates,
    const std::optional<std::vector<double>>& center) {
  if (estimates.empty()) throw_bad_parameter("mean_squared_error: no estimates");
  const std::size_t d = estimates.front().size();
  for (const auto& est : estimates) {
    if (est.size() != d)
      throw Error("dimension-mismatch", "estimates have inconsistent dimensions");
  }

  std::vector<double> c(d, 0.0);
  if (center) {
    if (center->size() != d)
      throw Error("dimension-mismatch", "MSE center has wrong dimension");
    c = *center;
  } else {
    for (const auto& est : estimates) {
      for (std::size_t j = 0; j < d; ++j) c[j] += est[j];
    }
    for (auto& v : c) v /= static_cast<double>(estimates.size());
  }

  std::vector<double> result(d, 0.0);
  for (const auto& est : estimates) {
    for (std::size_t j = 0; j < d; ++j) {
      const double dev = est[j] - c[j];
      result[j] += dev * dev;
    }
  }
  for (auto& v : result) v /= static_cast<double>(estimates.size());
  return result;
}

double overall_mse(std::span<const double> per_component_mse) {
  double total = 0.0;
  for (const double v : per_component_mse) total += v;
  return total;
}

BenchReport run_bench(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  BenchReport report;
  report.estimates = run_replications(config);
  report.mse = mean_squared_error(report.estimates, config.true_mean);
  report.omse = overall_mse(report.mse);
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace resir
