#include "resir/sir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "resir/error.hpp"

namespace resir {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> normalized_from_log(const std::vector<double>& log_raw) {
  double max_log = kNegInf;
  for (std::size_t i = 0; i < log_raw.size(); ++i) {
    if (std::isnan(log_raw[i])) {
      throw Error("invalid-weight",
                  "pool sample " + std::to_string(i) + " has NaN log weight");
    }
    max_log = std::max(max_log, log_raw[i]);
  }
  if (max_log == kNegInf) {
    throw Error("degenerate-pool",
                "all importance weights are zero (target support disjoint from draws)");
  }
  std::vector<double> weights(log_raw.size());
  double total = 0.0;
  for (std::size_t i = 0; i < log_raw.size(); ++i) {
    weights[i] = std::exp(log_raw[i] - max_log);
    total += weights[i];
  }
  for (auto& w : weights) w /= total;
  return weights;
}

} // namespace

std::string_view to_string(ResampleScheme scheme) {
  switch (scheme) {
    case ResampleScheme::Plain: return "sir";
    case ResampleScheme::Antithetic: return "anti-sir";
    case ResampleScheme::LatinHypercube: return "lhs-sir";
  }
  return "?";
}

std::optional<ResampleScheme> scheme_from_string(std::string_view name) {
  if (name == "sir") return ResampleScheme::Plain;
  if (name == "anti-sir") return ResampleScheme::Antithetic;
  if (name == "lhs-sir") return ResampleScheme::LatinHypercube;
  return std::nullopt;
}

WeightedPool::WeightedPool(PointBatch samples, std::vector<double> log_raw,
                           std::vector<double> weights)
    : samples_(std::move(samples)),
      log_raw_(std::move(log_raw)),
      weights_(std::move(weights)) {
  cumulative_.resize(weights_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    acc += weights_[i];
    cumulative_[i] = acc;
  }
  cumulative_.back() = 1.0; // every u in [0,1] maps to an index
}

WeightedPool WeightedPool::from_log_weights(PointBatch samples,
                                            std::vector<double> log_raw_weights) {
  if (samples.size() == 0) throw_bad_parameter("pool needs at least one sample");
  if (samples.size() != log_raw_weights.size())
    throw_bad_parameter("pool: one log weight per sample required");
  auto weights = normalized_from_log(log_raw_weights);
  return WeightedPool(std::move(samples), std::move(log_raw_weights),
                      std::move(weights));
}

WeightedPool WeightedPool::from_weights(PointBatch samples, std::vector<double> weights) {
  if (samples.size() == 0) throw_bad_parameter("pool needs at least one sample");
  if (samples.size() != weights.size())
    throw_bad_parameter("pool: one weight per sample required");
  std::vector<double> log_raw(weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (std::isnan(weights[i]))
      throw Error("invalid-weight",
                  "pool sample " + std::to_string(i) + " has NaN weight");
    if (weights[i] < 0.0) throw_bad_parameter("pool weights must be nonnegative");
    total += weights[i];
    log_raw[i] = std::log(weights[i]);
  }
  if (total <= 0.0) throw Error("degenerate-pool", "all pool weights are zero");
  for (auto& w : weights) w /= total;
  return WeightedPool(std::move(samples), std::move(log_raw), std::move(weights));
}

std::size_t WeightedPool::index_from_uniform(double u) const {
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<std::size_t>(it - cumulative_.begin());
}

WeightedPool build_pool(const UnnormalizedTarget& target, const Proposal& proposal,
                        std::size_t pool_size, RngStream& stream) {
  if (target.dim != proposal.dim)
    throw Error("dimension-mismatch", "target and proposal dimensions differ");
  if (pool_size == 0) throw_bad_parameter("pool size must be at least 1");

  PointBatch samples(target.dim);
  samples.reserve(pool_size);
  std::vector<double> log_raw(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) {
    auto row = samples.append();
    proposal.draw(stream, row);
    const double log_p = target.log_density(row);
    const double log_g = proposal.log_density(row);
    if (std::isnan(log_p) || std::isnan(log_g)) {
      throw Error("invalid-weight",
                  "pool sample " + std::to_string(i) + " has NaN density");
    }
    log_raw[i] = log_p - log_g;
  }

  if (target.dim == 1) {
    // Arrange scalar pools in value order so the inverse transform is the
    // quantile function of the pool distribution. Antithetic pairing and
    // stratification reduce variance through that monotone map; for plain
    // resampling the order is immaterial. Multivariate pools have no total
    // order and stay in draw order.
    std::vector<std::size_t> order(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return samples[a][0] < samples[b][0];
    });
    PointBatch sorted_samples(1);
    sorted_samples.reserve(pool_size);
    std::vector<double> sorted_log_raw(pool_size);
    for (std::size_t i = 0; i < pool_size; ++i) {
      sorted_samples.append(samples[order[i]]);
      sorted_log_raw[i] = log_raw[order[i]];
    }
    return WeightedPool::from_log_weights(std::move(sorted_samples),
                                          std::move(sorted_log_raw));
  }
  return WeightedPool::from_log_weights(std::move(samples), std::move(log_raw));
}

std::size_t inverse_cdf_index(const WeightedPool& pool, double u) {
  return pool.index_from_uniform(u);
}

std::vector<std::size_t> resample_indices(const WeightedPool& pool,
                                          ResampleScheme scheme, std::size_t n,
                                          RngStream& stream) {
  if (n == 0) throw_bad_parameter("resample size must be at least 1");
  std::vector<std::size_t> indices;
  indices.reserve(n);
  switch (scheme) {
    case ResampleScheme::Plain: {
      for (std::size_t i = 0; i < n; ++i) {
        indices.push_back(pool.index_from_uniform(stream.next_uniform()));
      }
      break;
    }
    case ResampleScheme::Antithetic: {
      const std::size_t pairs = n / 2;
      const auto uniforms = antithetic_uniforms(stream, pairs);
      for (const double u : uniforms) indices.push_back(pool.index_from_uniform(u));
      if (n % 2 == 1) {
        indices.push_back(pool.index_from_uniform(stream.next_uniform()));
      }
      break;
    }
    case ResampleScheme::LatinHypercube: {
      for (const double v : stratified_uniforms(stream, n)) {
        indices.push_back(pool.index_from_uniform(v));
      }
      break;
    }
  }
  return indices;
}

namespace {

PointBatch gather(const WeightedPool& pool, const std::vector<std::size_t>& indices) {
  PointBatch out(pool.dim());
  out.reserve(indices.size());
  for (const auto k : indices) out.append(pool.sample(k));
  return out;
}

} // namespace

PointBatch resample_plain(const WeightedPool& pool, std::size_t n, RngStream& stream) {
  return gather(pool, resample_indices(pool, ResampleScheme::Plain, n, stream));
}

PointBatch resample_antithetic(const WeightedPool& pool, std::size_t n,
                               RngStream& stream) {
  return gather(pool, resample_indices(pool, ResampleScheme::Antithetic, n, stream));
}

PointBatch resample_lhs(const WeightedPool& pool, std::size_t n, RngStream& stream,
                        bool shuffle) {
  auto indices = resample_indices(pool, ResampleScheme::LatinHypercube, n, stream);
  if (shuffle) {
    for (std::size_t i = indices.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(stream.next_uniform() * static_cast<double>(i));
      std::swap(indices[i - 1], indices[std::min(j, i - 1)]);
    }
  }
  return gather(pool, indices);
}

PointBatch resample(const WeightedPool& pool, ResampleScheme scheme, std::size_t n,
                    RngStream& stream) {
  return gather(pool, resample_indices(pool, scheme, n, stream));
}

double effective_sample_size(const WeightedPool& pool) {
  double sum_sq = 0.0;
  for (const double w : pool.weights()) sum_sq += w * w;
  return 1.0 / sum_sq;
}

} // namespace resir
