#include "resir/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "resir/distributions.hpp"
#include "resir/error.hpp"

namespace resir {
namespace {

[[noreturn]] void config_error(const std::string& context, const std::string& what) {
  throw Error("config-parse", context.empty() ? what : context + ": " + what);
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(trim(std::string_view(text).substr(start)));
      return parts;
    }
    parts.push_back(trim(std::string_view(text).substr(start, pos - start)));
    start = pos + 1;
  }
}

double parse_real(const std::string& text, const std::string& context,
                  const std::string& key) {
  try {
    std::size_t consumed = 0;
    const double value = std::stod(text, &consumed);
    if (consumed != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    config_error(context, "key '" + key + "': cannot parse number '" + text + "'");
  }
}

std::size_t parse_size(const std::string& text, const std::string& context,
                       const std::string& key) {
  unsigned long long value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    config_error(context, "key '" + key + "': cannot parse size '" + text + "'");
  }
  if (value == 0) config_error(context, "key '" + key + "' must be positive");
  return static_cast<std::size_t>(value);
}

std::uint64_t parse_seed(const std::string& text, const std::string& context) {
  std::uint64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc() || result.ptr != last) {
    config_error(context, "key 'seed': cannot parse 64-bit integer '" + text + "'");
  }
  return value;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& context,
                                    const std::string& key) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) {
    values.push_back(parse_real(part, context, key));
  }
  return values;
}

bool is_proposal_family(const std::string& name) {
  return name == "unif" || name == "logistic" || name == "cauchy" ||
         name == "invgauss" || name == "mvnorm";
}

bool is_target_family(const std::string& name) {
  return name == "beta" || name == "norm" || name == "t" || name == "f" ||
         name == "unif" || name == "logistic" || name == "cauchy" ||
         name == "invgauss" || name == "kotz";
}

void expect_args(const DistributionCode& code, std::size_t count,
                 const std::string& context) {
  if (code.args.size() != count) {
    config_error(context, "distribution '" + code.name + "' expects " +
                              std::to_string(count) + " parameters");
  }
}

KotzParams kotz_params_from_config(const DistributionCode& code,
                                   const RunConfig& config,
                                   const std::string& context) {
  expect_args(code, 3, context);
  KotzParams params;
  params.r = code.args[0];
  params.s = code.args[1];
  params.m = code.args[2];

  Eigen::MatrixXd sigma;
  if (!config.kotz_sigma.empty()) {
    const auto total = config.kotz_sigma.size();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(total))));
    if (static_cast<std::size_t>(d) * static_cast<std::size_t>(d) != total) {
      config_error(context, "kotz-sigma must hold d*d row-major entries");
    }
    sigma.resize(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        sigma(i, j) = config.kotz_sigma[static_cast<std::size_t>(i * d + j)];
      }
    }
  } else {
    sigma = default_kotz_dispersion();
  }

  Eigen::VectorXd mean;
  if (!config.kotz_mean.empty()) {
    mean.resize(static_cast<Eigen::Index>(config.kotz_mean.size()));
    for (std::size_t j = 0; j < config.kotz_mean.size(); ++j) {
      mean(static_cast<Eigen::Index>(j)) = config.kotz_mean[j];
    }
  } else {
    mean = Eigen::VectorXd::Zero(sigma.rows());
  }
  if (mean.size() != sigma.rows()) {
    config_error(context, "kotz-mean and kotz-sigma dimensions disagree");
  }
  params.mean = std::move(mean);
  params.dispersion = std::move(sigma);
  return params;
}

} // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::BenchUnivariate: return "bench-univariate";
    case ExperimentKind::BenchKotz: return "bench-kotz";
    case ExperimentKind::ChangePoint: return "changepoint";
    case ExperimentKind::ConvergenceCheck: return "convergence-check";
  }
  return "?";
}

std::optional<ExperimentKind> experiment_from_string(std::string_view name) {
  if (name == "bench-univariate") return ExperimentKind::BenchUnivariate;
  if (name == "bench-kotz") return ExperimentKind::BenchKotz;
  if (name == "changepoint") return ExperimentKind::ChangePoint;
  if (name == "convergence-check") return ExperimentKind::ConvergenceCheck;
  return std::nullopt;
}

RunConfig default_config(ExperimentKind kind) {
  RunConfig config;
  config.experiment = kind;
  switch (kind) {
    case ExperimentKind::BenchUnivariate:
      break; // struct defaults are the univariate table's sizes
    case ExperimentKind::BenchKotz:
      config.pool_size = 2000;
      config.resample_size = 400;
      config.target_code = "kotz(0.5,2,3)";
      config.proposal_code = "mvnorm(match)";
      break;
    case ExperimentKind::ChangePoint:
      config.pool_size = 5000;
      config.resample_size = 2000;
      break;
    case ExperimentKind::ConvergenceCheck:
      config.replications = 1;
      break;
  }
  return config;
}

std::vector<ResampleScheme> parse_scheme_list(const std::string& text,
                                              const std::string& context) {
  std::vector<ResampleScheme> schemes;
  for (const auto& part : split(text, ',')) {
    const auto scheme = scheme_from_string(part);
    if (!scheme) {
      config_error(context, "unknown scheme '" + part +
                                "' (expected sir, anti-sir or lhs-sir)");
    }
    schemes.push_back(*scheme);
  }
  if (schemes.empty()) config_error(context, "scheme list is empty");
  return schemes;
}

void apply_config_value(RunConfig& config, const std::string& key,
                        const std::string& value, const std::string& context) {
  if (key == "N") {
    config.pool_size = parse_size(value, context, key);
  } else if (key == "n") {
    config.resample_size = parse_size(value, context, key);
  } else if (key == "K") {
    config.replications = parse_size(value, context, key);
  } else if (key == "seed") {
    config.seed = parse_seed(value, context);
  } else if (key == "schemes" || key == "scheme") {
    config.schemes = parse_scheme_list(value, context);
  } else if (key == "target") {
    config.target_code = value;
    parse_distribution_code(value, context);
  } else if (key == "proposal") {
    config.proposal_code = value;
    parse_distribution_code(value, context);
  } else if (key == "case") {
    if (value == "1") {
      config.prior_case = 1;
    } else if (value == "2") {
      config.prior_case = 2;
    } else {
      config_error(context, "key 'case' must be 1 or 2");
    }
  } else if (key == "center") {
    if (value == "grand") {
      config.center = MseCenter::GrandMean;
    } else if (value == "true") {
      config.center = MseCenter::TrueMean;
    } else {
      config_error(context, "key 'center' must be 'grand' or 'true'");
    }
  } else if (key == "true-mean") {
    config.true_mean = parse_real_list(value, context, key);
  } else if (key == "kotz-mean") {
    config.kotz_mean = parse_real_list(value, context, key);
  } else if (key == "kotz-sigma") {
    config.kotz_sigma = parse_real_list(value, context, key);
  } else if (key == "data") {
    config.data_path = value;
  } else if (key == "out") {
    config.out_path = value;
  } else if (key == "plot-data") {
    config.plot_path = value;
  } else if (key == "plot-series") {
    config.plot_series_path = value;
  } else if (key == "format") {
    if (value == "csv") {
      config.format = OutputFormat::Csv;
    } else if (value == "json") {
      config.format = OutputFormat::Json;
    } else {
      config_error(context, "key 'format' must be 'csv' or 'json'");
    }
  } else {
    config_error(context, "unknown key '" + key + "'");
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open config file '" + path + "'");

  std::optional<RunConfig> config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string text = trim(line);
    const std::string context = path + ":" + std::to_string(line_no);
    if (text.empty() || text.front() == '#') continue;
    if (text.front() == '[') {
      if (text.back() != ']') config_error(context, "unterminated section header");
      if (config) config_error(context, "only one experiment section per file");
      const std::string name = trim(std::string_view(text).substr(1, text.size() - 2));
      const auto kind = experiment_from_string(name);
      if (!kind) config_error(context, "unknown experiment '" + name + "'");
      config = default_config(*kind);
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) config_error(context, "expected 'key = value'");
    if (!config) config_error(context, "key before any [experiment] section");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    apply_config_value(*config, key, value, context);
  }
  if (!config) throw Error("config-parse", path + ": no [experiment] section found");
  validate_config(*config);
  return *config;
}

DistributionCode parse_distribution_code(const std::string& code,
                                         const std::string& context) {
  const auto open = code.find('(');
  if (open == std::string::npos || code.back() != ')') {
    config_error(context, "malformed distribution code '" + code +
                              "' (expected name(arg,...))");
  }
  DistributionCode parsed;
  parsed.name = trim(std::string_view(code).substr(0, open));
  const std::string args = code.substr(open + 1, code.size() - open - 2);
  if (!is_target_family(parsed.name) && !is_proposal_family(parsed.name)) {
    config_error(context, "unknown distribution code '" + parsed.name + "'");
  }
  if (parsed.name == "mvnorm") {
    if (trim(args) != "match") {
      config_error(context, "mvnorm proposal supports only 'mvnorm(match)'");
    }
    return parsed;
  }
  if (!trim(args).empty()) {
    for (const auto& part : split(args, ',')) {
      parsed.args.push_back(parse_real(part, context, code));
    }
  }
  // arity checks per family
  if (parsed.name == "beta" || parsed.name == "unif" || parsed.name == "norm" ||
      parsed.name == "logistic" || parsed.name == "cauchy" || parsed.name == "f" ||
      parsed.name == "invgauss") {
    expect_args(parsed, 2, context);
  } else if (parsed.name == "t" || parsed.name == "kotz") {
    expect_args(parsed, 3, context);
  }
  return parsed;
}

UnnormalizedTarget target_from_code(const std::string& code, const RunConfig& config) {
  const std::string context = "target '" + code + "'";
  const auto parsed = parse_distribution_code(code, context);
  if (!is_target_family(parsed.name)) {
    config_error(context, "'" + parsed.name + "' cannot be used as a target");
  }
  if (parsed.name == "beta") return make_beta_target(parsed.args[0], parsed.args[1]);
  if (parsed.name == "norm") return make_normal_target(parsed.args[0], parsed.args[1]);
  if (parsed.name == "t")
    return make_student_t_target(parsed.args[0], parsed.args[1], parsed.args[2]);
  if (parsed.name == "f") return make_fisher_f_target(parsed.args[0], parsed.args[1]);
  if (parsed.name == "unif") return make_uniform_target(parsed.args[0], parsed.args[1]);
  if (parsed.name == "logistic")
    return make_logistic_target(parsed.args[0], parsed.args[1]);
  if (parsed.name == "cauchy") return make_cauchy_target(parsed.args[0], parsed.args[1]);
  if (parsed.name == "invgauss")
    return make_inverse_gaussian_target(parsed.args[0], parsed.args[1]);
  return make_kotz_target(kotz_params_from_config(parsed, config, context));
}

Proposal proposal_from_code(const std::string& code, const RunConfig& config) {
  const std::string context = "proposal '" + code + "'";
  const auto parsed = parse_distribution_code(code, context);
  if (!is_proposal_family(parsed.name)) {
    config_error(context, "'" + parsed.name + "' has no direct sampler; it cannot be a proposal");
  }
  if (parsed.name == "unif") return make_uniform_proposal(parsed.args[0], parsed.args[1]);
  if (parsed.name == "logistic")
    return make_logistic_proposal(parsed.args[0], parsed.args[1]);
  if (parsed.name == "cauchy")
    return make_cauchy_proposal(parsed.args[0], parsed.args[1]);
  if (parsed.name == "invgauss")
    return make_inverse_gaussian_proposal(parsed.args[0], parsed.args[1]);
  // mvnorm(match): mirror the Kotz target's location and dispersion.
  const auto kotz_code = parse_distribution_code(config.target_code, context);
  if (kotz_code.name != "kotz") {
    config_error(context, "mvnorm(match) requires a kotz(...) target");
  }
  auto params = kotz_params_from_config(kotz_code, config, context);
  return make_mvnormal_proposal(std::move(params.mean), std::move(params.dispersion));
}

std::function<double(double)> cdf_from_code(const std::string& code) {
  const std::string context = "target '" + code + "'";
  const auto parsed = parse_distribution_code(code, context);
  const auto& a = parsed.args;
  if (parsed.name == "beta") return [a](double x) { return beta_cdf(a[0], a[1], x); };
  if (parsed.name == "norm") return [a](double x) { return normal_cdf(a[0], a[1], x); };
  if (parsed.name == "t")
    return [a](double x) { return student_t_cdf(a[0], a[1], a[2], x); };
  if (parsed.name == "f") return [a](double x) { return fisher_f_cdf(a[0], a[1], x); };
  if (parsed.name == "unif") return [a](double x) { return uniform_cdf(a[0], a[1], x); };
  if (parsed.name == "logistic")
    return [a](double x) { return logistic_cdf(a[0], a[1], x); };
  if (parsed.name == "cauchy") return [a](double x) { return cauchy_cdf(a[0], a[1], x); };
  if (parsed.name == "invgauss")
    return [a](double x) { return inverse_gaussian_cdf(a[0], a[1], x); };
  config_error(context, "no scalar CDF for '" + parsed.name + "'");
}

std::optional<std::vector<double>> true_mean_from_code(const std::string& code,
                                                       const RunConfig& config) {
  const std::string context = "target '" + code + "'";
  const auto parsed = parse_distribution_code(code, context);
  const auto& a = parsed.args;
  if (parsed.name == "beta") return std::vector<double>{a[0] / (a[0] + a[1])};
  if (parsed.name == "norm") return std::vector<double>{a[0]};
  if (parsed.name == "t") {
    if (a[0] <= 1.0) return std::nullopt;
    return std::vector<double>{a[1]};
  }
  if (parsed.name == "f") {
    if (a[1] <= 2.0) return std::nullopt;
    return std::vector<double>{a[1] / (a[1] - 2.0)};
  }
  if (parsed.name == "unif") return std::vector<double>{0.5 * (a[0] + a[1])};
  if (parsed.name == "logistic") return std::vector<double>{a[0]};
  if (parsed.name == "cauchy") return std::nullopt;
  if (parsed.name == "invgauss") return std::vector<double>{a[0]};
  if (parsed.name == "kotz") {
    const auto params = kotz_params_from_config(parsed, config, context);
    return std::vector<double>(params.mean.data(), params.mean.data() + params.mean.size());
  }
  return std::nullopt;
}

void validate_config(const RunConfig& config) {
  const std::string context = std::string(to_string(config.experiment));
  if (config.schemes.empty()) config_error(context, "scheme list is empty");
  if (config.resample_size == 0 || config.pool_size == 0 || config.replications == 0) {
    config_error(context, "sizes N, n, K must be positive");
  }
  if (config.pool_size < config.resample_size) {
    config_error(context, "need N >= n");
  }
  switch (config.experiment) {
    case ExperimentKind::BenchUnivariate: {
      const auto target = target_from_code(config.target_code, config);
      const auto proposal = proposal_from_code(config.proposal_code, config);
      if (target.dim != 1 || proposal.dim != 1) {
        config_error(context, "bench-univariate needs 1-d target and proposal");
      }
      break;
    }
    case ExperimentKind::BenchKotz: {
      const auto target = target_from_code(config.target_code, config);
      const auto proposal = proposal_from_code(config.proposal_code, config);
      if (target.dim != proposal.dim) {
        config_error(context, "target and proposal dimensions disagree");
      }
      break;
    }
    case ExperimentKind::ChangePoint:
      if (config.replications < 2) {
        config_error(context, "changepoint summaries need K >= 2");
      }
      break;
    case ExperimentKind::ConvergenceCheck: {
      const auto target = target_from_code(config.target_code, config);
      if (target.dim != 1) config_error(context, "convergence-check is 1-d only");
      cdf_from_code(config.target_code);
      proposal_from_code(config.proposal_code, config);
      break;
    }
  }
  if (config.center == MseCenter::TrueMean && !config.true_mean &&
      !true_mean_from_code(config.target_code, config)) {
    config_error(context, "center=true needs a known or explicit true mean");
  }
}

std::string emit_config(const RunConfig& config) {
  std::ostringstream out;
  out << '[' << to_string(config.experiment) << "]\n";
  std::string schemes;
  for (const auto scheme : config.schemes) {
    if (!schemes.empty()) schemes += ',';
    schemes += to_string(scheme);
  }
  out << "schemes = " << schemes << '\n';
  out << "N = " << config.pool_size << '\n';
  out << "n = " << config.resample_size << '\n';
  out << "K = " << config.replications << '\n';
  out << "seed = " << config.seed << '\n';
  out << "target = " << config.target_code << '\n';
  out << "proposal = " << config.proposal_code << '\n';
  out << "case = " << config.prior_case << '\n';
  out << "center = " << (config.center == MseCenter::TrueMean ? "true" : "grand") << '\n';
  const auto emit_list = [&out](const char* key, const std::vector<double>& values) {
    if (values.empty()) return;
    out << key << " = ";
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j) out << ',';
      char buffer[32];
      std::snprintf(buffer, sizeof(buffer), "%.17g", values[j]);
      out << buffer;
    }
    out << '\n';
  };
  if (config.true_mean) emit_list("true-mean", *config.true_mean);
  emit_list("kotz-mean", config.kotz_mean);
  emit_list("kotz-sigma", config.kotz_sigma);
  out << "data = " << config.data_path << '\n';
  if (!config.out_path.empty()) out << "out = " << config.out_path << '\n';
  if (!config.plot_path.empty()) out << "plot-data = " << config.plot_path << '\n';
  if (!config.plot_series_path.empty())
    out << "plot-series = " << config.plot_series_path << '\n';
  out << "format = " << (config.format == OutputFormat::Csv ? "csv" : "json") << '\n';
  return out.str();
}

Eigen::MatrixXd default_kotz_dispersion() {
  Eigen::MatrixXd sigma(4, 4);
  sigma << 5.3, 0.0, 0.0, -0.2,
           0.0, 4.0, -0.4, 0.3,
           0.0, -0.4, 6.8, 0.0,
          -0.2, 0.3, 0.0, 9.0;
  return sigma;
}

} // namespace resir
