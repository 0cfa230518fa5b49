#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "resir/rng.hpp"
#include "resir/sir.hpp"

namespace resir {

/// Yearly disaster counts, 1851-1962 inclusive (112 years).
struct DisasterSeries {
  std::vector<int> counts;
  int first_year = 1851;
};

inline constexpr std::size_t kDisasterYears = 112;

struct Case1Hyper {
  double a1 = 0.0;
  double a2 = 0.0;
};
struct Case2Hyper {
  double a = 0.0;
  double alpha = 0.0; // rate ratio, lambda2 = alpha * lambda1
};

/// Two-regime Poisson parameters: rate `rate_before` for years 1..theta and
/// `rate_after` for the rest, plus the hyperparameter draws of whichever
/// prior case produced them.
struct ChangePointParams {
  int change_point = 1; // theta, in {1, ..., years-1}
  double rate_before = 1.0;
  double rate_after = 1.0;
  std::variant<Case1Hyper, Case2Hyper> hyper;
};

/// Two-regime Poisson log likelihood with the count-factorial term dropped
/// (constant in the parameters, cancels in normalized weights):
///   sum_{i<=theta} (x_i log l1 - l1) + sum_{j>theta} (x_j log l2 - l2).
double log_likelihood(const ChangePointParams& params, std::span<const int> counts);

/// Case 1 prior draw: theta uniform on {1..years-1}; a_i ~ Gamma(10, 10)
/// i.i.d.; lambda_i | a_i ~ Gamma(3, a_i) independently (shape-rate
/// convention throughout).
ChangePointParams sample_prior_case1(RngStream& stream, int years = kDisasterYears);

/// Case 2 prior draw: theta as in case 1; a ~ Gamma(10, 10);
/// lambda1 | a ~ Gamma(3, a); log alpha ~ U(log 1/8, log 2);
/// lambda2 = alpha * lambda1 exactly.
ChangePointParams sample_prior_case2(RngStream& stream, int years = kDisasterYears);

/// Posterior draws by SIR with the prior as proposal: N prior tuples, log
/// raw weight = log likelihood, resample n tuples with the chosen scheme.
std::vector<ChangePointParams> posterior_sir(const DisasterSeries& data,
                                             int prior_case, ResampleScheme scheme,
                                             std::size_t pool_size,
                                             std::size_t resample_size,
                                             RngStream& stream);

/// K independent posterior_sir runs using child streams 1..K of `seed`;
/// parallelized like the bench harness, identical output serial or parallel.
std::vector<std::vector<ChangePointParams>> run_posterior_replications(
    const DisasterSeries& data, int prior_case, ResampleScheme scheme,
    std::size_t pool_size, std::size_t resample_size, std::size_t replications,
    std::uint64_t seed);

struct ParamSummary {
  double mean = 0.0;
  double sd = 0.0; // population convention (divide by K)
};

/// Across-replication mean and standard deviation of the per-replication
/// posterior means of theta, lambda1, lambda2. Needs at least 2 runs.
struct PosteriorSummary {
  ParamSummary change_point;
  ParamSummary rate_before;
  ParamSummary rate_after;
  std::size_t replications = 0;
};

PosteriorSummary summarize(const std::vector<std::vector<ChangePointParams>>& runs);

/// Most frequent theta across all runs' draws (smallest on ties); a
/// diagnostic companion to the real-valued posterior mean.
int theta_mode(const std::vector<std::vector<ChangePointParams>>& runs);

} // namespace resir
