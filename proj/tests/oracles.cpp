#include "oracles.hpp"

namespace oracles {
namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa, double b,
                double fb, double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol,
                 int max_depth) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

std::size_t linear_scan_index(std::span<const double> cumulative, double u) {
  for (std::size_t k = 0; k < cumulative.size(); ++k) {
    if (u <= cumulative[k]) return k;
  }
  return cumulative.size() - 1;
}

double ks_vs_density(std::vector<double> sample,
                     const std::function<double(double)>& log_pdf, double support_lo) {
  std::sort(sample.begin(), sample.end());
  const auto pdf = [&log_pdf](double x) { return std::exp(log_pdf(x)); };
  const double n = static_cast<double>(sample.size());

  double cdf = integrate(pdf, support_lo, sample.front(), 1e-9);
  double d = std::fabs(cdf - 1.0 / n);
  d = std::max(d, cdf);
  for (std::size_t i = 1; i < sample.size(); ++i) {
    cdf += integrate(pdf, sample[i - 1], sample[i], 1e-9);
    d = std::max(d, std::fabs(cdf - static_cast<double>(i) / n));
    d = std::max(d, std::fabs(cdf - static_cast<double>(i + 1) / n));
  }
  return d;
}

double mean(std::span<const double> values) {
  double total = 0.0;
  for (const double v : values) total += v;
  return total / static_cast<double>(values.size());
}

double sample_sd(std::span<const double> values) {
  const double m = mean(values);
  double ss = 0.0;
  for (const double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double covariance(std::span<const double> x, std::span<const double> y) {
  const double mx = mean(x);
  const double my = mean(y);
  double total = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) total += (x[i] - mx) * (y[i] - my);
  return total / static_cast<double>(x.size() - 1);
}

double beta23_cdf(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * (6.0 - 8.0 * x + 3.0 * x * x);
}

} // namespace oracles
