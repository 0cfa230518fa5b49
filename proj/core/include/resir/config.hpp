#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resir/densities.hpp"
#include "resir/sir.hpp"

namespace resir {

enum class ExperimentKind { BenchUnivariate, BenchKotz, ChangePoint, ConvergenceCheck };

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> experiment_from_string(std::string_view name);

enum class OutputFormat { Csv, Json };

/// Which center Eq.-style MSE uses: the grand mean of the replicate
/// estimates (default) or the known true expectation.
enum class MseCenter { GrandMean, TrueMean };

/// One archived run: experiment selector plus every knob the experiments
/// read. Parsed from a flat key=value config file with one [experiment]
/// section; CLI flags override file values.
struct RunConfig {
  ExperimentKind experiment = ExperimentKind::BenchUnivariate;
  std::vector<ResampleScheme> schemes{ResampleScheme::Plain, ResampleScheme::Antithetic,
                                      ResampleScheme::LatinHypercube};
  std::size_t pool_size = 20000;     // N
  std::size_t resample_size = 1000;  // n
  std::size_t replications = 1000;   // K
  std::uint64_t seed = 0;
  std::string target_code = "beta(2,3)";
  std::string proposal_code = "unif(0,1)";
  int prior_case = 1;
  MseCenter center = MseCenter::GrandMean;
  std::optional<std::vector<double>> true_mean; // explicit override of the center
  std::vector<double> kotz_mean;                // empty = zero vector
  std::vector<double> kotz_sigma;               // row-major d*d, empty = built-in default
  std::string data_path = "data/coal_mining_disasters.csv";
  std::string out_path;                         // empty = "<experiment>.<csv|json>"
  std::string plot_path;                        // empty = no plot data emitted
  std::string plot_series_path;                 // changepoint: year,count emission
  OutputFormat format = OutputFormat::Csv;
};

/// Experiment-specific defaults (pool/resample/replication sizes and codes).
RunConfig default_config(ExperimentKind kind);

/// Parses a config file: '#' comments, one [experiment] section header,
/// flat key = value lines. Unknown keys, bad codes and non-positive sizes
/// are Error("config-parse") carrying the key name and line number.
RunConfig parse_config_file(const std::string& path);

/// Applies one key=value pair (the same keys the config file uses);
/// `context` prefixes error messages, e.g. "file.cfg:12".
void apply_config_value(RunConfig& config, const std::string& key,
                        const std::string& value, const std::string& context);

/// Full validation: positive sizes, N >= n, non-empty schemes, known codes
/// compatible with the experiment.
void validate_config(const RunConfig& config);

/// Renders the config in the file grammar; parse_config_file of the result
/// reproduces the RunConfig. Used to archive the exact settings of a run.
std::string emit_config(const RunConfig& config);

/// Comma-separated scheme list ("sir,anti-sir,lhs-sir").
std::vector<ResampleScheme> parse_scheme_list(const std::string& text,
                                              const std::string& context);

// Distribution codes, matching the notation of the experiment tables:
// beta(2,3), unif(0,1), norm(0,1), logistic(0,1), cauchy(0,1), t(2,0,1),
// f(10,6), invgauss(1,1), kotz(r,s,m), mvnorm(match).
struct DistributionCode {
  std::string name;
  std::vector<double> args;
};

DistributionCode parse_distribution_code(const std::string& code,
                                         const std::string& context);

/// Instantiates a target from its code; kotz(...) reads the mean/dispersion
/// from the config (built-in defaults when unset).
UnnormalizedTarget target_from_code(const std::string& code, const RunConfig& config);

/// Instantiates a proposal. mvnorm(match) mirrors the Kotz target's mean and
/// dispersion, the standard choice for the multivariate bench.
Proposal proposal_from_code(const std::string& code, const RunConfig& config);

/// Exact CDF for 1-d codes (used by convergence diagnostics).
std::function<double(double)> cdf_from_code(const std::string& code);

/// Known expectation of a coded distribution, when it exists (Cauchy: none).
std::optional<std::vector<double>> true_mean_from_code(const std::string& code,
                                                       const RunConfig& config);

/// The 4-d dispersion matrix of the built-in Kotz benchmark target.
Eigen::MatrixXd default_kotz_dispersion();

} // namespace resir
