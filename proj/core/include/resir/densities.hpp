#pragma once

#include <functional>
#include <span>

#include <Eigen/Dense>

#include "resir/rng.hpp"

namespace resir {

/// A target density known only up to a constant: log p(x), -infinity outside
/// the support, never NaN for in-domain points. The normalizing constant is
/// never needed anywhere in the toolkit.
struct UnnormalizedTarget {
  std::size_t dim = 1;
  std::function<double(std::span<const double>)> log_density;
};

/// A proposal: normalized log density plus a direct sampler. draw() writes a
/// dim-length point whose proposal density is strictly positive.
struct Proposal {
  std::size_t dim = 1;
  std::function<double(std::span<const double>)> log_density;
  std::function<void(RngStream&, std::span<double>)> draw;
};

/// Kotz-type distribution parameters: kernel q^(m-1) * exp(-r * q^s) with
/// q = (x-mean)' dispersion^-1 (x-mean). Requires r > 0, s > 0, 2m + d > 2
/// and a positive-definite dispersion matrix. The normalizing constant is
/// deliberately left out; SIR only ever needs the kernel.
struct KotzParams {
  double r = 0.5;
  double s = 1.0;
  double m = 1.0;
  Eigen::VectorXd mean;
  Eigen::MatrixXd dispersion;
};

/// Unnormalized Kotz log density: (m-1) log q - r q^s.
double kotz_log_density(const KotzParams& params, std::span<const double> x);

// Target factories (normalized where the family is; Kotz stays unnormalized).
UnnormalizedTarget make_beta_target(double alpha, double beta);
UnnormalizedTarget make_normal_target(double mean, double stddev);
UnnormalizedTarget make_student_t_target(double dof, double location, double scale);
UnnormalizedTarget make_fisher_f_target(double dof1, double dof2);
UnnormalizedTarget make_uniform_target(double lower, double upper);
UnnormalizedTarget make_logistic_target(double location, double scale);
UnnormalizedTarget make_cauchy_target(double location, double scale);
UnnormalizedTarget make_inverse_gaussian_target(double mean, double shape);
UnnormalizedTarget make_kotz_target(KotzParams params);

// Proposal factories: density + sampler pairs.
Proposal make_uniform_proposal(double lower, double upper);
Proposal make_logistic_proposal(double location, double scale);
Proposal make_cauchy_proposal(double location, double scale);
Proposal make_inverse_gaussian_proposal(double mean, double shape);
Proposal make_mvnormal_proposal(Eigen::VectorXd mean, Eigen::MatrixXd covariance);

} // namespace resir
