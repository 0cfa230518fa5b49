#include "resir/changepoint.hpp"

#include <array>
#include <cmath>
#include <map>
#include <string>

#include "parallel.hpp"
#include "resir/distributions.hpp"
#include "resir/error.hpp"
#include "resir/points.hpp"

namespace resir {
namespace {

int draw_change_point(RngStream& stream, int years) {
  if (years < 2) throw_bad_parameter("change-point model needs at least 2 years");
  const double u = stream.next_uniform();
  const int theta = 1 + static_cast<int>(std::floor(static_cast<double>(years - 1) * u));
  return theta > years - 1 ? years - 1 : theta; // clamp the measure-zero u -> 1 edge
}

/// O(1) likelihood evaluation backed by count prefix sums.
class SegmentLikelihood {
public:
  explicit SegmentLikelihood(std::span<const int> counts) : prefix_(counts.size() + 1, 0.0) {
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] < 0) throw_bad_parameter("disaster counts must be nonnegative");
      prefix_[i + 1] = prefix_[i] + static_cast<double>(counts[i]);
    }
  }

  std::size_t years() const { return prefix_.size() - 1; }

  double operator()(int theta, double rate_before, double rate_after) const {
    const auto years_total = static_cast<double>(years());
    const double t = static_cast<double>(theta);
    const double sum_before = prefix_[static_cast<std::size_t>(theta)];
    const double sum_after = prefix_.back() - sum_before;
    return sum_before * std::log(rate_before) - t * rate_before +
           sum_after * std::log(rate_after) - (years_total - t) * rate_after;
  }

private:
  std::vector<double> prefix_;
};

// Point encoding used to push parameter tuples through the weighted pool:
// (theta, lambda1, lambda2, hyper0, hyper1).
constexpr std::size_t kTupleDim = 5;

void encode(const ChangePointParams& params, std::span<double> out) {
  out[0] = static_cast<double>(params.change_point);
  out[1] = params.rate_before;
  out[2] = params.rate_after;
  if (const auto* h1 = std::get_if<Case1Hyper>(&params.hyper)) {
    out[3] = h1->a1;
    out[4] = h1->a2;
  } else {
    const auto& h2 = std::get<Case2Hyper>(params.hyper);
    out[3] = h2.a;
    out[4] = h2.alpha;
  }
}

ChangePointParams decode(std::span<const double> row, int prior_case) {
  ChangePointParams params;
  params.change_point = static_cast<int>(std::llround(row[0]));
  params.rate_before = row[1];
  params.rate_after = row[2];
  if (prior_case == 1) {
    params.hyper = Case1Hyper{row[3], row[4]};
  } else {
    params.hyper = Case2Hyper{row[3], row[4]};
  }
  return params;
}

ChangePointParams draw_prior(RngStream& stream, int prior_case, int years) {
  return prior_case == 1 ? sample_prior_case1(stream, years)
                         : sample_prior_case2(stream, years);
}

void check_case(int prior_case) {
  if (prior_case != 1 && prior_case != 2)
    throw_bad_parameter("prior case must be 1 or 2");
}

} // namespace

double log_likelihood(const ChangePointParams& params, std::span<const int> counts) {
  if (counts.size() < 2) throw_bad_parameter("need at least 2 yearly counts");
  const int theta = params.change_point;
  if (theta < 1 || theta >= static_cast<int>(counts.size()))
    throw_bad_parameter("change point must lie in {1, ..., years-1}");
  if (!(params.rate_before > 0.0) || !(params.rate_after > 0.0))
    throw_bad_parameter("rates must be positive");
  return SegmentLikelihood(counts)(theta, params.rate_before, params.rate_after);
}

ChangePointParams sample_prior_case1(RngStream& stream, int years) {
  ChangePointParams params;
  params.change_point = draw_change_point(stream, years);
  const double a1 = draw_gamma(stream, 10.0, 10.0);
  params.rate_before = draw_gamma(stream, 3.0, a1);
  const double a2 = draw_gamma(stream, 10.0, 10.0);
  params.rate_after = draw_gamma(stream, 3.0, a2);
  params.hyper = Case1Hyper{a1, a2};
  return params;
}

ChangePointParams sample_prior_case2(RngStream& stream, int years) {
  static const double kLogLower = std::log(0.125);
  static const double kLogUpper = std::log(2.0);
  ChangePointParams params;
  params.change_point = draw_change_point(stream, years);
  const double a = draw_gamma(stream, 10.0, 10.0);
  params.rate_before = draw_gamma(stream, 3.0, a);
  const double alpha = std::exp(draw_uniform(stream, kLogLower, kLogUpper));
  params.rate_after = alpha * params.rate_before;
  params.hyper = Case2Hyper{a, alpha};
  return params;
}

std::vector<ChangePointParams> posterior_sir(const DisasterSeries& data,
                                             int prior_case, ResampleScheme scheme,
                                             std::size_t pool_size,
                                             std::size_t resample_size,
                                             RngStream& stream) {
  check_case(prior_case);
  if (pool_size < resample_size || resample_size == 0)
    throw_bad_parameter("need pool size >= resample size >= 1");
  const SegmentLikelihood likelihood(data.counts);
  const int years = static_cast<int>(likelihood.years());

  PointBatch tuples(kTupleDim);
  tuples.reserve(pool_size);
  std::vector<double> log_weights(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i) {
    const auto params = draw_prior(stream, prior_case, years);
    encode(params, tuples.append());
    log_weights[i] = likelihood(params.change_point, params.rate_before,
                                params.rate_after);
  }
  const auto pool =
      WeightedPool::from_log_weights(std::move(tuples), std::move(log_weights));
  const auto indices = resample_indices(pool, scheme, resample_size, stream);

  std::vector<ChangePointParams> draws;
  draws.reserve(indices.size());
  for (const auto k : indices) draws.push_back(decode(pool.sample(k), prior_case));
  return draws;
}

std::vector<std::vector<ChangePointParams>> run_posterior_replications(
    const DisasterSeries& data, int prior_case, ResampleScheme scheme,
    std::size_t pool_size, std::size_t resample_size, std::size_t replications,
    std::uint64_t seed) {
  check_case(prior_case);
  if (replications == 0) throw_bad_parameter("need at least one replication");

  const RngStream master(seed);
  std::vector<std::vector<ChangePointParams>> runs(replications);

  // Same replicate contract as the bench harness: child stream k, slot k.
  detail::parallel_replicates(replications, [&](std::size_t k) {
    RngStream stream = master.child(k);
    try {
      runs[k - 1] =
          posterior_sir(data, prior_case, scheme, pool_size, resample_size, stream);
    } catch (const Error& e) {
      throw Error(e.code(), "replicate " + std::to_string(k) + ": " + e.what());
    }
  });
  return runs;
}

PosteriorSummary summarize(const std::vector<std::vector<ChangePointParams>>& runs) {
  if (runs.size() < 2)
    throw_bad_parameter("summarize: standard deviation needs at least 2 replications");

  const auto K = static_cast<double>(runs.size());
  std::vector<std::array<double, 3>> means;
  means.reserve(runs.size());
  for (const auto& run : runs) {
    if (run.empty()) throw_bad_parameter("summarize: empty replication");
    std::array<double, 3> m{0.0, 0.0, 0.0};
    for (const auto& p : run) {
      m[0] += static_cast<double>(p.change_point);
      m[1] += p.rate_before;
      m[2] += p.rate_after;
    }
    for (auto& v : m) v /= static_cast<double>(run.size());
    means.push_back(m);
  }

  PosteriorSummary summary;
  summary.replications = runs.size();
  ParamSummary* fields[3] = {&summary.change_point, &summary.rate_before,
                             &summary.rate_after};
  for (int j = 0; j < 3; ++j) {
    double mean = 0.0;
    for (const auto& m : means) mean += m[j];
    mean /= K;
    double var = 0.0;
    for (const auto& m : means) var += (m[j] - mean) * (m[j] - mean);
    var /= K; // population convention, matching the MSE definition
    fields[j]->mean = mean;
    fields[j]->sd = std::sqrt(var);
  }
  return summary;
}

int theta_mode(const std::vector<std::vector<ChangePointParams>>& runs) {
  std::map<int, std::size_t> frequency;
  for (const auto& run : runs) {
    for (const auto& p : run) ++frequency[p.change_point];
  }
  if (frequency.empty()) throw_bad_parameter("theta_mode: no draws");
  int best = frequency.begin()->first;
  std::size_t best_count = 0;
  for (const auto& [theta, count] : frequency) {
    if (count > best_count) {
      best = theta;
      best_count = count;
    }
  }
  return best;
}

} // namespace resir
