#pragma once

#include "resir/rng.hpp"

namespace resir {

// Scalar log densities. All return -infinity outside the support and throw
// Error("bad-parameter") for invalid parameters. Everything downstream works
// in log scale; exponentiation happens only inside weight normalization.

double beta_log_pdf(double alpha, double beta, double x);
double normal_log_pdf(double mean, double stddev, double x);
double student_t_log_pdf(double dof, double location, double scale, double x);
double fisher_f_log_pdf(double dof1, double dof2, double x);
double uniform_log_pdf(double lower, double upper, double x);
double logistic_log_pdf(double location, double scale, double x);
double cauchy_log_pdf(double location, double scale, double x);
double inverse_gaussian_log_pdf(double mean, double shape, double x);

// Exact CDFs (used for convergence diagnostics and goodness-of-fit checks).
double beta_cdf(double alpha, double beta, double x);
double normal_cdf(double mean, double stddev, double x);
double student_t_cdf(double dof, double location, double scale, double x);
double fisher_f_cdf(double dof1, double dof2, double x);
double uniform_cdf(double lower, double upper, double x);
double logistic_cdf(double location, double scale, double x);
double cauchy_cdf(double location, double scale, double x);
double inverse_gaussian_cdf(double mean, double shape, double x);

/// Standard normal quantile, accurate to full double precision (rational
/// approximation refined by one Halley step against the erfc-based CDF).
double standard_normal_quantile(double p);

/// Regularized incomplete beta I_x(a, b) via the standard continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// Inverse-CDF samplers (one uniform each, except where noted).
double draw_uniform(RngStream& stream, double lower, double upper);
double draw_logistic(RngStream& stream, double location, double scale);
double draw_cauchy(RngStream& stream, double location, double scale);

/// One standard normal via the quantile transform (consumes one uniform;
/// zero uniforms are skipped so the output is always finite).
double draw_standard_normal(RngStream& stream);

/// Inverse-Gaussian draw by the Michael-Schucany-Haas transform: one normal,
/// one uniform, a root selection. Exact, fixed stream consumption.
double draw_inverse_gaussian(RngStream& stream, double mean, double shape);

/// Gamma(shape, rate) draw, shape >= 1, by the Marsaglia-Tsang squeeze.
/// Consumes a variable number of uniforms (rejection), deterministic per
/// stream state.
double draw_gamma(RngStream& stream, double shape, double rate);

} // namespace resir
