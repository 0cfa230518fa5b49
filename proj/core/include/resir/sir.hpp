#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "resir/densities.hpp"
#include "resir/points.hpp"
#include "resir/rng.hpp"

namespace resir {

/// How the n output samples are drawn from the weighted pool.
enum class ResampleScheme { Plain, Antithetic, LatinHypercube };

std::string_view to_string(ResampleScheme scheme);
/// Parses the CLI/config names "sir", "anti-sir", "lhs-sir".
std::optional<ResampleScheme> scheme_from_string(std::string_view name);

/// The N proposal draws with their normalized importance weights and the
/// cumulative-weight table that the inverse-transform resamplers read.
/// Immutable after construction; safe to share across parallel resampling
/// calls (each call owns its stream).
class WeightedPool {
public:
  /// Builds the pool from samples and log raw weights (log p - log g, or any
  /// unstandardized log weight). Normalization is done in log space with a
  /// max shift, so heavy-tailed weight ratios cannot overflow. The final
  /// cumulative weight is forced to exactly 1 so every u in [0,1] lands on
  /// an index. Throws Error("degenerate-pool") when every weight is zero and
  /// Error("invalid-weight") when a weight is NaN (naming the sample).
  static WeightedPool from_log_weights(PointBatch samples,
                                       std::vector<double> log_raw_weights);

  /// Same, from plain nonnegative weights (normalized internally).
  static WeightedPool from_weights(PointBatch samples, std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::size_t dim() const noexcept { return samples_.dim(); }

  std::span<const double> sample(std::size_t i) const { return samples_[i]; }
  const PointBatch& samples() const noexcept { return samples_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const double> log_raw_weights() const noexcept { return log_raw_; }
  std::span<const double> cumulative_weights() const noexcept { return cumulative_; }

  /// Smallest index k with u <= cumulative_weights()[k] (binary search).
  /// This mirrors the piecewise inverse-CDF boundary convention u <= w_1 for
  /// the first atom, so ties at stratum boundaries are deterministic.
  std::size_t index_from_uniform(double u) const;

private:
  WeightedPool(PointBatch samples, std::vector<double> log_raw,
               std::vector<double> weights);

  PointBatch samples_;
  std::vector<double> log_raw_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

/// Steps 1-2: draw pool_size samples from the proposal and weight them by
/// the target/proposal density ratio, normalized over the pool. Scalar pools
/// are arranged in nondecreasing sample order, making the inverse transform
/// the quantile function of the pool distribution; that monotone map is what
/// lets antithetic pairs and stratified lookups cancel variance. Resampling
/// marginals are order-invariant, so plain SIR is unaffected. Multivariate
/// pools keep draw order.
WeightedPool build_pool(const UnnormalizedTarget& target, const Proposal& proposal,
                        std::size_t pool_size, RngStream& stream);

/// Free-function spelling of WeightedPool::index_from_uniform.
std::size_t inverse_cdf_index(const WeightedPool& pool, double u);

/// Index-level resampling: which pool atom each output copies.
/// Plain: n independent inverse-CDF draws. Antithetic: for even n, m = n/2
/// uniforms u_i give outputs (lookup(u_1..u_m), lookup(1-u_1..1-u_m)) so
/// positions i and n/2+i are antithetic partners; odd n pairs n-1 and
/// appends one plain draw. Latin hypercube: one lookup per stratum uniform,
/// in stratum order (the index sequence is nondecreasing).
std::vector<std::size_t> resample_indices(const WeightedPool& pool,
                                          ResampleScheme scheme, std::size_t n,
                                          RngStream& stream);

PointBatch resample_plain(const WeightedPool& pool, std::size_t n, RngStream& stream);
PointBatch resample_antithetic(const WeightedPool& pool, std::size_t n,
                               RngStream& stream);
/// shuffle = true applies a stream-driven Fisher-Yates permutation for
/// callers that need exchangeable-looking output; mean estimators are
/// order-invariant either way.
PointBatch resample_lhs(const WeightedPool& pool, std::size_t n, RngStream& stream,
                        bool shuffle = false);
PointBatch resample(const WeightedPool& pool, ResampleScheme scheme, std::size_t n,
                    RngStream& stream);

/// Weight-degeneracy diagnostic 1 / sum(w_i^2), in [1, N]; equals N iff the
/// weights are uniform.
double effective_sample_size(const WeightedPool& pool);

} // namespace resir
