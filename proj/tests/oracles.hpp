// Test-only oracles, independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace oracles {

/// Adaptive Simpson quadrature.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_depth = 40);

/// First index k with u <= cumulative[k]: the piecewise inverse-CDF rule by
/// brute-force scan.
std::size_t linear_scan_index(std::span<const double> cumulative, double u);

/// KS distance between a sample and the CDF obtained by numerically
/// integrating exp(log_pdf) across the sorted sample (tail mass below the
/// smallest observation is neglected).
double ks_vs_density(std::vector<double> sample,
                     const std::function<double(double)>& log_pdf,
                     double support_lo);

double mean(std::span<const double> values);
double sample_sd(std::span<const double> values); // 1/(n-1)
double covariance(std::span<const double> x, std::span<const double> y);

/// Exact Beta(2,3) CDF: 6x^2 - 8x^3 + 3x^4 on (0,1).
double beta23_cdf(double x);

} // namespace oracles
