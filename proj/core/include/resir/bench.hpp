#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "resir/densities.hpp"
#include "resir/points.hpp"
#include "resir/sir.hpp"

namespace resir {

/// One benchmark cell: replicate pool construction + resampling + mean
/// estimation K times. Replicate k draws from child stream k of the master
/// seed, so each replicate is bit-identical whether run alone or in a batch,
/// serial or parallel.
struct ExperimentConfig {
  UnnormalizedTarget target;
  Proposal proposal;
  std::size_t pool_size = 0;     // N
  std::size_t resample_size = 0; // n
  std::size_t replications = 1;  // K
  ResampleScheme scheme = ResampleScheme::Plain;
  std::uint64_t seed = 0;
  /// Optional known expectation; when set, the MSE is centered on it instead
  /// of the grand mean of the replicate estimates.
  std::optional<std::vector<double>> true_mean;
};

struct BenchReport {
  std::vector<std::vector<double>> estimates; // K rows, one mean vector each
  std::vector<double> mse;                    // per component
  double omse = 0.0;                          // sum of components
  double wall_time_seconds = 0.0;
};

/// Componentwise arithmetic mean of the batch. Empty input is an error.
std::vector<double> estimate_mean(const PointBatch& points);

/// K replicate mean estimates (replicate k = pool from child stream k,
/// resample, mean). Runs on RESIR_THREADS workers (default: all cores);
/// results are collected by replicate index so parallel and serial runs
/// produce identical output.
std::vector<std::vector<double>> run_replications(const ExperimentConfig& config);

/// Componentwise (1/K) sum of squared deviations from `center`; `center`
/// defaults to the grand mean of the estimates.
std::vector<double> mean_squared_error(
    const std::vector<std::vector<double>>& estimates,
    const std::optional<std::vector<double>>& center = std::nullopt);

/// Sum of the per-component MSEs.
double overall_mse(std::span<const double> per_component_mse);

/// Replications + MSE + OMSE + wall time in one call.
BenchReport run_bench(const ExperimentConfig& config);

/// Worker count used for parallel replication: RESIR_THREADS when set and
/// positive, otherwise the hardware concurrency, never more than `jobs`.
unsigned worker_count(std::size_t jobs);

} // namespace resir
