#include <doctest.h>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/cauchy.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/inverse_gaussian.hpp>
#include <boost/math/distributions/logistic.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "resir/distributions.hpp"
#include "resir/error.hpp"
#include "resir/rng.hpp"

using namespace resir;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("beta log density: closed-form spot values") {
  CHECK(beta_log_pdf(1.0, 1.0, 0.4) == doctest::Approx(0.0));
  CHECK(beta_log_pdf(2.0, 3.0, 0.5) == doctest::Approx(std::log(1.5)).epsilon(1e-14));
  CHECK(beta_log_pdf(2.0, 3.0, -0.1) == -kInf);
  CHECK(beta_log_pdf(2.0, 3.0, 0.0) == -kInf);
  CHECK(beta_log_pdf(2.0, 3.0, 1.0) == -kInf);
  CHECK_THROWS_AS((void)beta_log_pdf(0.0, 1.0, 0.5), Error);
  CHECK_THROWS_AS((void)beta_log_pdf(1.0, -2.0, 0.5), Error);
}

TEST_CASE("normal and cauchy modes") {
  CHECK(normal_log_pdf(0.0, 1.0, 0.0) ==
        doctest::Approx(-0.5 * std::log(2.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(cauchy_log_pdf(0.0, 1.0, 0.0) ==
        doctest::Approx(-std::log(std::numbers::pi)).epsilon(1e-15));
  CHECK_THROWS_AS((void)normal_log_pdf(0.0, 0.0, 1.0), Error);
  CHECK_THROWS_AS((void)cauchy_log_pdf(0.0, -1.0, 1.0), Error);
}

TEST_CASE("scalar log densities agree with boost.math") {
  const std::vector<double> xs{-3.7, -1.0, -0.2, 0.0, 0.31, 0.5, 0.77, 1.0, 2.5, 9.0};
  const boost::math::beta_distribution<> beta_d(2.0, 3.0);
  const boost::math::beta_distribution<> beta_d2(0.9, 0.9);
  const boost::math::normal_distribution<> norm_d(0.0, 1.0);
  const boost::math::students_t_distribution<> t_d(2.0);
  const boost::math::fisher_f_distribution<> f_d(10.0, 6.0);
  const boost::math::logistic_distribution<> log_d(0.0, 1.0);
  const boost::math::cauchy_distribution<> cauchy_d(0.0, 1.0);
  const boost::math::inverse_gaussian_distribution<> ig_d(1.0, 1.0);

  for (const double x : xs) {
    if (x > 0.0 && x < 1.0) {
      CHECK(beta_log_pdf(2.0, 3.0, x) ==
            doctest::Approx(std::log(boost::math::pdf(beta_d, x))).epsilon(1e-12));
      CHECK(beta_log_pdf(0.9, 0.9, x) ==
            doctest::Approx(std::log(boost::math::pdf(beta_d2, x))).epsilon(1e-12));
    }
    CHECK(normal_log_pdf(0.0, 1.0, x) ==
          doctest::Approx(std::log(boost::math::pdf(norm_d, x))).epsilon(1e-12));
    CHECK(student_t_log_pdf(2.0, 0.0, 1.0, x) ==
          doctest::Approx(std::log(boost::math::pdf(t_d, x))).epsilon(1e-12));
    if (x > 0.0) {
      CHECK(fisher_f_log_pdf(10.0, 6.0, x) ==
            doctest::Approx(std::log(boost::math::pdf(f_d, x))).epsilon(1e-12));
      CHECK(inverse_gaussian_log_pdf(1.0, 1.0, x) ==
            doctest::Approx(std::log(boost::math::pdf(ig_d, x))).epsilon(1e-12));
    }
    CHECK(logistic_log_pdf(0.0, 1.0, x) ==
          doctest::Approx(std::log(boost::math::pdf(log_d, x))).epsilon(1e-12));
    CHECK(cauchy_log_pdf(0.0, 1.0, x) ==
          doctest::Approx(std::log(boost::math::pdf(cauchy_d, x))).epsilon(1e-12));
  }
}

TEST_CASE("CDFs agree with boost.math") {
  const std::vector<double> xs{-4.0, -1.3, 0.01, 0.4, 0.62, 1.0, 1.8, 5.5};
  const boost::math::beta_distribution<> beta_d(2.0, 3.0);
  const boost::math::students_t_distribution<> t_d(2.0);
  const boost::math::fisher_f_distribution<> f_d(10.0, 6.0);
  const boost::math::inverse_gaussian_distribution<> ig_d(1.0, 1.0);

  for (const double x : xs) {
    if (x > 0.0 && x < 1.0) {
      CHECK(beta_cdf(2.0, 3.0, x) ==
            doctest::Approx(boost::math::cdf(beta_d, x)).epsilon(1e-12));
    }
    CHECK(student_t_cdf(2.0, 0.0, 1.0, x) ==
          doctest::Approx(boost::math::cdf(t_d, x)).epsilon(1e-12));
    if (x > 0.0) {
      CHECK(fisher_f_cdf(10.0, 6.0, x) ==
            doctest::Approx(boost::math::cdf(f_d, x)).epsilon(1e-12));
      CHECK(inverse_gaussian_cdf(1.0, 1.0, x) ==
            doctest::Approx(boost::math::cdf(ig_d, x)).epsilon(1e-10));
    }
    CHECK(normal_cdf(0.0, 1.0, x) ==
          doctest::Approx(boost::math::cdf(boost::math::normal_distribution<>(), x))
              .epsilon(1e-13));
  }
}

TEST_CASE("standard normal quantile matches boost to near machine precision") {
  const boost::math::normal_distribution<> norm_d;
  for (const double p : {1e-12, 1e-6, 0.02, 0.2, 0.5, 0.7, 0.975, 1.0 - 1e-9}) {
    CHECK(standard_normal_quantile(p) ==
          doctest::Approx(boost::math::quantile(norm_d, p)).epsilon(1e-12));
  }
  CHECK_THROWS_AS((void)standard_normal_quantile(0.0), Error);
  CHECK_THROWS_AS((void)standard_normal_quantile(1.0), Error);
}

TEST_CASE("normalized 1-d densities integrate to one (quadrature oracle)") {
  const auto total = [](const std::function<double(double)>& log_pdf, double lo,
                        double hi) {
    return oracles::integrate([&](double x) { return std::exp(log_pdf(x)); }, lo, hi,
                              1e-9);
  };
  CHECK(total([](double x) { return beta_log_pdf(2.0, 3.0, x); }, 0.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK(total([](double x) { return beta_log_pdf(0.9, 0.9, x); }, 1e-12, 1.0 - 1e-12) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK(total([](double x) { return normal_log_pdf(0.0, 1.0, x); }, -12.0, 12.0) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK(total([](double x) { return student_t_log_pdf(2.0, 0.0, 1.0, x); }, -3000.0,
              3000.0) == doctest::Approx(1.0).epsilon(1e-4));
  // F(10,6) density integrates to 1; this doubles as the spot check at x = 1.
  CHECK(total([](double x) { return fisher_f_log_pdf(10.0, 6.0, x); }, 0.0, 4000.0) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK(total([](double x) { return logistic_log_pdf(0.0, 1.0, x); }, -60.0, 60.0) ==
        doctest::Approx(1.0).epsilon(1e-4));
  CHECK(total([](double x) { return cauchy_log_pdf(0.0, 1.0, x); }, -1e5, 1e5) ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(total([](double x) { return inverse_gaussian_log_pdf(1.0, 1.0, x); }, 1e-9,
              60.0) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("inverse-CDF samplers invert their own CDFs") {
  RngStream stream(314);
  RngStream twin(314);
  for (int i = 0; i < 2000; ++i) {
    const double x = draw_logistic(stream, 0.5, 2.0);
    const double u = twin.next_uniform();
    CHECK(logistic_cdf(0.5, 2.0, x) == doctest::Approx(u).epsilon(1e-9));
  }
  for (int i = 0; i < 2000; ++i) {
    const double x = draw_cauchy(stream, 0.0, 1.0);
    const double u = twin.next_uniform();
    CHECK(cauchy_cdf(0.0, 1.0, x) == doctest::Approx(u).epsilon(1e-9));
  }
  for (int i = 0; i < 2000; ++i) {
    const double x = draw_uniform(stream, 0.0, 1.0);
    CHECK(x == twin.next_uniform()); // identity transform
  }
}

TEST_CASE("samplers agree with their densities (numeric-CDF KS oracle)") {
  constexpr int kDraws = 100000;
  RngStream stream(2718);

  std::vector<double> draws(kDraws);

  for (auto& x : draws) x = draw_logistic(stream, 0.0, 1.0);
  CHECK(oracles::ks_vs_density(draws, [](double x) { return logistic_log_pdf(0.0, 1.0, x); },
                               -60.0) < 0.01);

  for (auto& x : draws) x = draw_inverse_gaussian(stream, 1.0, 1.0);
  CHECK(oracles::ks_vs_density(
            draws, [](double x) { return inverse_gaussian_log_pdf(1.0, 1.0, x); },
            1e-9) < 0.01);

  for (auto& x : draws) x = draw_cauchy(stream, 0.0, 1.0);
  CHECK(oracles::ks_vs_density(draws, [](double x) { return cauchy_log_pdf(0.0, 1.0, x); },
                               -1e7) < 0.01);
}

TEST_CASE("inverse gaussian draws have the right mean") {
  RngStream stream(161803);
  double total = 0.0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) total += draw_inverse_gaussian(stream, 1.0, 1.0);
  CHECK(total / kDraws == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("gamma draws match the shape-rate moments") {
  RngStream stream(55);
  constexpr int kDraws = 100000;
  std::vector<double> draws(kDraws);
  for (auto& x : draws) x = draw_gamma(stream, 10.0, 10.0);
  CHECK(oracles::mean(draws) == doctest::Approx(1.0).epsilon(0.01));
  const double sd = oracles::sample_sd(draws);
  CHECK(sd * sd == doctest::Approx(0.1).epsilon(0.03)); // var = shape/rate^2

  for (auto& x : draws) x = draw_gamma(stream, 3.0, 2.0);
  CHECK(oracles::mean(draws) == doctest::Approx(1.5).epsilon(0.01));
  CHECK_THROWS_AS((void)draw_gamma(stream, 0.5, 1.0), Error);
}

TEST_CASE("standard normal draws pass a KS check") {
  RngStream stream(99991);
  std::vector<double> draws(100000);
  for (auto& x : draws) x = draw_standard_normal(stream);
  CHECK(oracles::ks_vs_density(draws, [](double x) { return normal_log_pdf(0.0, 1.0, x); },
                               -12.0) < 0.01);
}
