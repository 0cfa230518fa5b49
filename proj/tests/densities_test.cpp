#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "resir/densities.hpp"
#include "resir/distributions.hpp"
#include "resir/error.hpp"

using namespace resir;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss-Jordan inverse, independent of the Eigen solve used by the library.
std::array<std::array<double, 4>, 4> invert4(std::array<std::array<double, 4>, 4> a) {
  std::array<std::array<double, 4>, 4> inv{};
  for (int i = 0; i < 4; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
    }
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const double scale = a[col][col];
    for (int j = 0; j < 4; ++j) {
      a[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double factor = a[r][col];
      for (int j = 0; j < 4; ++j) {
        a[r][j] -= factor * a[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

KotzParams benchmark_kotz_params() {
  KotzParams params;
  params.r = 0.5;
  params.s = 2.0;
  params.m = 3.0;
  params.mean = Eigen::VectorXd::Zero(4);
  params.dispersion.resize(4, 4);
  params.dispersion << 5.3, 0.0, 0.0, -0.2,
                       0.0, 4.0, -0.4, 0.3,
                       0.0, -0.4, 6.8, 0.0,
                      -0.2, 0.3, 0.0, 9.0;
  return params;
}

} // namespace

TEST_CASE("target factories match the scalar log densities") {
  const auto beta = make_beta_target(2.0, 3.0);
  const auto norm = make_normal_target(0.0, 1.0);
  const auto t2 = make_student_t_target(2.0, 0.0, 1.0);
  const auto f = make_fisher_f_target(10.0, 6.0);
  for (double x = -2.0; x <= 3.0; x += 0.17) {
    const std::array<double, 1> point{x};
    if (x > 0.0 && x < 1.0) {
      CHECK(beta.log_density(point) ==
            doctest::Approx(beta_log_pdf(2.0, 3.0, x)).epsilon(1e-14));
    } else {
      CHECK(beta.log_density(point) == -kInf);
    }
    CHECK(norm.log_density(point) ==
          doctest::Approx(normal_log_pdf(0.0, 1.0, x)).epsilon(1e-14));
    CHECK(t2.log_density(point) ==
          doctest::Approx(student_t_log_pdf(2.0, 0.0, 1.0, x)).epsilon(1e-14));
    if (x > 0.0) {
      CHECK(f.log_density(point) ==
            doctest::Approx(fisher_f_log_pdf(10.0, 6.0, x)).epsilon(1e-14));
    } else {
      CHECK(f.log_density(point) == -kInf);
    }
  }
  CHECK_THROWS_AS((void)make_beta_target(-1.0, 2.0), Error);
}

TEST_CASE("proposal draws always land in the proposal's support") {
  RngStream stream(8);
  for (const auto& proposal :
       {make_uniform_proposal(0.0, 1.0), make_logistic_proposal(0.0, 1.0),
        make_cauchy_proposal(0.0, 1.0), make_inverse_gaussian_proposal(1.0, 1.0)}) {
    for (int i = 0; i < 10000; ++i) {
      std::array<double, 1> point{};
      proposal.draw(stream, point);
      CHECK(proposal.log_density(point) > -kInf);
    }
  }
}

TEST_CASE("kotz density vanishes at the center when m > 1") {
  auto params = benchmark_kotz_params();
  const std::array<double, 4> center{0.0, 0.0, 0.0, 0.0};
  CHECK(kotz_log_density(params, center) == -kInf);
}

TEST_CASE("kotz with m = 1, s = 1, identity dispersion is the normal kernel") {
  KotzParams params;
  params.r = 0.5;
  params.s = 1.0;
  params.m = 1.0;
  params.mean = Eigen::VectorXd::Zero(3);
  params.dispersion = Eigen::MatrixXd::Identity(3, 3);
  const auto target = make_kotz_target(params);

  const std::array<double, 3> x{0.3, -1.2, 2.0};
  const double norm_sq = 0.09 + 1.44 + 4.0;
  CHECK(target.log_density(x) == doctest::Approx(-0.5 * norm_sq).epsilon(1e-12));
  CHECK(target.log_density(std::array<double, 3>{0, 0, 0}) == doctest::Approx(0.0));
}

TEST_CASE("kotz reduction: m=1, s=1 log differences equal the mvnormal ones") {
  KotzParams params = benchmark_kotz_params();
  params.m = 1.0;
  params.s = 1.0;
  const auto kotz = make_kotz_target(params);
  const auto mvn = make_mvnormal_proposal(params.mean, params.dispersion);

  RngStream stream(4242);
  std::array<double, 4> x{};
  std::array<double, 4> y{};
  for (int rep = 0; rep < 200; ++rep) {
    mvn.draw(stream, x);
    mvn.draw(stream, y);
    const double kotz_diff = kotz.log_density(x) - kotz.log_density(y);
    const double mvn_diff = mvn.log_density(x) - mvn.log_density(y);
    // r = 0.5 matches the normal kernel's -q/2 exactly
    CHECK(kotz_diff == doctest::Approx(mvn_diff).epsilon(1e-10));
  }
}

TEST_CASE("kotz at the benchmark parameters against an explicit inverse oracle") {
  const auto params = benchmark_kotz_params();
  std::array<std::array<double, 4>, 4> sigma{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) sigma[i][j] = params.dispersion(i, j);
  }
  const auto inv = invert4(sigma);

  // x = e1: q = (Sigma^-1)_{00}, roughly 1/5.3 with a small correction.
  const std::array<double, 4> e1{1.0, 0.0, 0.0, 0.0};
  const double q = inv[0][0];
  CHECK(q == doctest::Approx(1.0 / 5.3).epsilon(2e-3));
  const double expected = 2.0 * std::log(q) - 0.5 * q * q;
  CHECK(kotz_log_density(params, e1) == doctest::Approx(expected).epsilon(1e-12));

  // a second point exercising every matrix entry
  const std::array<double, 4> x{1.0, -2.0, 0.5, 3.0};
  double qx = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) qx += x[i] * inv[i][j] * x[j];
  }
  const double expected_x = 2.0 * std::log(qx) - 0.5 * qx * qx;
  CHECK(kotz_log_density(params, x) == doctest::Approx(expected_x).epsilon(1e-12));
}

TEST_CASE("kotz parameter validation") {
  auto params = benchmark_kotz_params();
  params.r = -1.0;
  CHECK_THROWS_AS((void)make_kotz_target(params), Error);

  params = benchmark_kotz_params();
  params.m = -2.0; // 2m + d = 0 < 2
  CHECK_THROWS_AS((void)make_kotz_target(params), Error);

  params = benchmark_kotz_params();
  params.dispersion(0, 0) = -5.3; // not positive definite
  CHECK_THROWS_AS((void)make_kotz_target(params), Error);

  const auto good = make_kotz_target(benchmark_kotz_params());
  CHECK_THROWS_AS((void)good.log_density(std::array<double, 3>{1, 2, 3}), Error);
}

TEST_CASE("mvnormal proposal: moments and density") {
  Eigen::VectorXd mean(2);
  mean << 1.0, -2.0;
  Eigen::MatrixXd cov(2, 2);
  cov << 2.0, 0.6,
         0.6, 1.0;
  const auto mvn = make_mvnormal_proposal(mean, cov);

  RngStream stream(31);
  constexpr int kDraws = 50000;
  double m0 = 0.0;
  double m1 = 0.0;
  std::vector<double> xs(kDraws);
  std::vector<double> ys(kDraws);
  for (int i = 0; i < kDraws; ++i) {
    std::array<double, 2> point{};
    mvn.draw(stream, point);
    m0 += point[0];
    m1 += point[1];
    xs[i] = point[0];
    ys[i] = point[1];
  }
  CHECK(m0 / kDraws == doctest::Approx(1.0).epsilon(0.03));
  CHECK(m1 / kDraws == doctest::Approx(-2.0).epsilon(0.02));
  CHECK(oracles::covariance(xs, xs) == doctest::Approx(2.0).epsilon(0.05));
  CHECK(oracles::covariance(xs, ys) == doctest::Approx(0.6).epsilon(0.1));
  CHECK(oracles::covariance(ys, ys) == doctest::Approx(1.0).epsilon(0.05));

  // density against the scalar normal in the independent case
  const auto iso = make_mvnormal_proposal(Eigen::VectorXd::Zero(2),
                                          Eigen::MatrixXd::Identity(2, 2));
  const std::array<double, 2> point{0.3, -0.7};
  CHECK(iso.log_density(point) ==
        doctest::Approx(normal_log_pdf(0.0, 1.0, 0.3) + normal_log_pdf(0.0, 1.0, -0.7))
            .epsilon(1e-13));

  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 2.0,
         2.0, 1.0; // eigenvalues 3, -1
  CHECK_THROWS_AS((void)make_mvnormal_proposal(mean, bad), Error);
}
