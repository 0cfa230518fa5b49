#include "resir/densities.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <utility>

#include "resir/distributions.hpp"
#include "resir/error.hpp"

namespace resir {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLogTwoPi = 1.8378770664093454836;

double log_beta_function(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

struct KotzCore {
  KotzParams params;
  Eigen::LLT<Eigen::MatrixXd> llt;

  double quadratic_form(std::span<const double> x) const {
    const Eigen::Map<const Eigen::VectorXd> point(x.data(),
                                                  static_cast<Eigen::Index>(x.size()));
    const Eigen::VectorXd centered = point - params.mean;
    return centered.dot(llt.solve(centered));
  }
};

KotzCore make_kotz_core(KotzParams params) {
  const auto d = params.mean.size();
  if (d < 1) throw_bad_parameter("kotz: mean vector must be non-empty");
  if (params.dispersion.rows() != d || params.dispersion.cols() != d)
    throw_bad_parameter("kotz: dispersion matrix must be d x d");
  if (!(params.r > 0.0) || !(params.s > 0.0))
    throw_bad_parameter("kotz: r and s must be positive");
  if (!(2.0 * params.m + static_cast<double>(d) > 2.0))
    throw_bad_parameter("kotz: requires 2m + d > 2");
  if (!params.dispersion.isApprox(params.dispersion.transpose()))
    throw_bad_parameter("kotz: dispersion matrix must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(params.dispersion);
  if (llt.info() != Eigen::Success)
    throw_bad_parameter("kotz: dispersion matrix must be positive definite");
  return KotzCore{std::move(params), std::move(llt)};
}

void check_dim(std::span<const double> x, std::size_t dim, const char* who) {
  if (x.size() != dim) {
    throw Error("dimension-mismatch", std::string(who) + ": point has wrong dimension");
  }
}

double kotz_log_kernel(const KotzCore& core, std::span<const double> x) {
  check_dim(x, static_cast<std::size_t>(core.params.mean.size()), "kotz_log_density");
  const double q = core.quadratic_form(x);
  if (q <= 0.0) {
    // q = 0 at the center: kernel q^(m-1) vanishes for m > 1, is 1 for m = 1.
    if (core.params.m == 1.0) return 0.0;
    return core.params.m > 1.0 ? kNegInf : std::numeric_limits<double>::infinity();
  }
  return (core.params.m - 1.0) * std::log(q) -
         core.params.r * std::pow(q, core.params.s);
}

UnnormalizedTarget scalar_target(std::function<double(double)> log_pdf) {
  return UnnormalizedTarget{
      1, [f = std::move(log_pdf)](std::span<const double> x) { return f(x[0]); }};
}

Proposal scalar_proposal(std::function<double(double)> log_pdf,
                         std::function<double(RngStream&)> sampler) {
  return Proposal{
      1,
      [f = std::move(log_pdf)](std::span<const double> x) { return f(x[0]); },
      [g = std::move(sampler)](RngStream& stream, std::span<double> out) {
        out[0] = g(stream);
      }};
}

} // namespace

double kotz_log_density(const KotzParams& params, std::span<const double> x) {
  return kotz_log_kernel(make_kotz_core(params), x);
}

UnnormalizedTarget make_beta_target(double alpha, double beta) {
  beta_log_pdf(alpha, beta, 0.5); // validate parameters eagerly
  const double log_norm = log_beta_function(alpha, beta);
  return scalar_target([alpha, beta, log_norm](double x) {
    if (x <= 0.0 || x >= 1.0) return kNegInf;
    return (alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) - log_norm;
  });
}

UnnormalizedTarget make_normal_target(double mean, double stddev) {
  normal_log_pdf(mean, stddev, 0.0);
  const double log_norm = std::log(stddev) + 0.5 * kLogTwoPi;
  return scalar_target([mean, stddev, log_norm](double x) {
    const double z = (x - mean) / stddev;
    return -0.5 * z * z - log_norm;
  });
}

UnnormalizedTarget make_student_t_target(double dof, double location, double scale) {
  student_t_log_pdf(dof, location, scale, 0.0);
  const double log_norm = std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
                          0.5 * std::log(dof * std::numbers::pi) - std::log(scale);
  return scalar_target([dof, location, scale, log_norm](double x) {
    const double z = (x - location) / scale;
    return log_norm - 0.5 * (dof + 1.0) * std::log1p(z * z / dof);
  });
}

UnnormalizedTarget make_fisher_f_target(double dof1, double dof2) {
  fisher_f_log_pdf(dof1, dof2, 1.0);
  const double h1 = 0.5 * dof1;
  const double h2 = 0.5 * dof2;
  const double log_norm = h1 * std::log(dof1 / dof2) - log_beta_function(h1, h2);
  return scalar_target([dof1, dof2, h1, h2, log_norm](double x) {
    if (x <= 0.0) return kNegInf;
    return log_norm + (h1 - 1.0) * std::log(x) - (h1 + h2) * std::log1p(dof1 * x / dof2);
  });
}

UnnormalizedTarget make_uniform_target(double lower, double upper) {
  uniform_log_pdf(lower, upper, lower);
  return scalar_target([lower, upper](double x) { return uniform_log_pdf(lower, upper, x); });
}

UnnormalizedTarget make_logistic_target(double location, double scale) {
  logistic_log_pdf(location, scale, 0.0);
  return scalar_target(
      [location, scale](double x) { return logistic_log_pdf(location, scale, x); });
}

UnnormalizedTarget make_cauchy_target(double location, double scale) {
  cauchy_log_pdf(location, scale, 0.0);
  return scalar_target(
      [location, scale](double x) { return cauchy_log_pdf(location, scale, x); });
}

UnnormalizedTarget make_inverse_gaussian_target(double mean, double shape) {
  inverse_gaussian_log_pdf(mean, shape, 1.0);
  return scalar_target(
      [mean, shape](double x) { return inverse_gaussian_log_pdf(mean, shape, x); });
}

UnnormalizedTarget make_kotz_target(KotzParams params) {
  auto core = std::make_shared<KotzCore>(make_kotz_core(std::move(params)));
  const auto dim = static_cast<std::size_t>(core->params.mean.size());
  return UnnormalizedTarget{
      dim, [core](std::span<const double> x) { return kotz_log_kernel(*core, x); }};
}

Proposal make_uniform_proposal(double lower, double upper) {
  uniform_log_pdf(lower, upper, lower);
  return scalar_proposal(
      [lower, upper](double x) { return uniform_log_pdf(lower, upper, x); },
      [lower, upper](RngStream& stream) { return draw_uniform(stream, lower, upper); });
}

Proposal make_logistic_proposal(double location, double scale) {
  logistic_log_pdf(location, scale, 0.0);
  return scalar_proposal(
      [location, scale](double x) { return logistic_log_pdf(location, scale, x); },
      [location, scale](RngStream& stream) {
        return draw_logistic(stream, location, scale);
      });
}

Proposal make_cauchy_proposal(double location, double scale) {
  cauchy_log_pdf(location, scale, 0.0);
  return scalar_proposal(
      [location, scale](double x) { return cauchy_log_pdf(location, scale, x); },
      [location, scale](RngStream& stream) { return draw_cauchy(stream, location, scale); });
}

Proposal make_inverse_gaussian_proposal(double mean, double shape) {
  inverse_gaussian_log_pdf(mean, shape, 1.0);
  return scalar_proposal(
      [mean, shape](double x) { return inverse_gaussian_log_pdf(mean, shape, x); },
      [mean, shape](RngStream& stream) {
        return draw_inverse_gaussian(stream, mean, shape);
      });
}

Proposal make_mvnormal_proposal(Eigen::VectorXd mean, Eigen::MatrixXd covariance) {
  const auto d = mean.size();
  if (d < 1) throw_bad_parameter("mvnormal: mean vector must be non-empty");
  if (covariance.rows() != d || covariance.cols() != d)
    throw_bad_parameter("mvnormal: covariance must be d x d");
  if (!covariance.isApprox(covariance.transpose()))
    throw_bad_parameter("mvnormal: covariance must be symmetric");
  Eigen::LLT<Eigen::MatrixXd> llt(covariance);
  if (llt.info() != Eigen::Success)
    throw Error("bad-parameter", "mvnormal: covariance must be positive definite");

  struct Core {
    Eigen::VectorXd mean;
    Eigen::MatrixXd chol; // lower-triangular factor
    Eigen::LLT<Eigen::MatrixXd> llt;
    double log_norm;      // 0.5*(d log 2pi + log|cov|)
  };
  const Eigen::MatrixXd chol = llt.matrixL();
  const double log_det = 2.0 * chol.diagonal().array().log().sum();
  auto core = std::make_shared<Core>(Core{std::move(mean), chol, std::move(llt),
                                          0.5 * (static_cast<double>(d) * kLogTwoPi + log_det)});

  return Proposal{
      static_cast<std::size_t>(d),
      [core](std::span<const double> x) {
        check_dim(x, static_cast<std::size_t>(core->mean.size()), "mvnormal log_density");
        const Eigen::Map<const Eigen::VectorXd> point(
            x.data(), static_cast<Eigen::Index>(x.size()));
        const Eigen::VectorXd centered = point - core->mean;
        return -0.5 * centered.dot(core->llt.solve(centered)) - core->log_norm;
      },
      [core](RngStream& stream, std::span<double> out) {
        const auto d = core->mean.size();
        Eigen::VectorXd z(d);
        for (Eigen::Index j = 0; j < d; ++j) z(j) = draw_standard_normal(stream);
        const Eigen::VectorXd x = core->mean + core->chol * z;
        for (Eigen::Index j = 0; j < d; ++j) out[static_cast<std::size_t>(j)] = x(j);
      }};
}

} // namespace resir
