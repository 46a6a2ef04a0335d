#include <cmath>
#include <numbers>

#include "doctest.h"
#include "muskat/grid.hpp"
#include "muskat/norms.hpp"
#include "muskat/rng.hpp"

using namespace muskat;
namespace {
constexpr double kPi = std::numbers::pi;

GridFunction smooth_sample(double L, std::size_t n, int harmonics, Rng& rng, double scale) {
  std::vector<double> v(n, 0.0);
  std::vector<double> ac(harmonics), as(harmonics);
  for (int j = 0; j < harmonics; ++j) {
    ac[j] = scale * rng.uniform(-1.0, 1.0) / (j + 1);
    as[j] = scale * rng.uniform(-1.0, 1.0) / (j + 1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    double x = -L + 2.0 * L * static_cast<double>(i) / n;
    for (int j = 0; j < harmonics; ++j) {
      double k = kPi * (j + 1) / L;
      v[i] += ac[j] * std::cos(k * x) + as[j] * std::sin(k * x);
    }
  }
  return GridFunction(L, std::move(v));
}
}  // namespace

TEST_CASE("tilde-L2 of a constant is |c| sqrt(2)") {
  auto g = GridFunction::constant(8.0, 256, 3.0);
  CHECK(local_norm(g, NormKind::tilde_l2()) == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("seminorms vanish on constants") {
  auto g = GridFunction::constant(8.0, 256, -2.7);
  CHECK(local_norm(g, NormKind::ddot_c(0.5)) <= 1e-12);
  CHECK(local_norm(g, NormKind::tilde_hk_gamma(3, 0.5)) <= 1e-12);
  CHECK(local_norm(g, NormKind::ck_gamma_gamma(2, 0.5)) <= 1e-12);
}

TEST_CASE("tilde-L2-mu with mu = 0 equals tilde-L2") {
  Rng rng(3);
  auto g = smooth_sample(8.0, 256, 4, rng, 1.0);
  CHECK(local_norm(g, NormKind::tilde_l2_mu(0.0)) == local_norm(g, NormKind::tilde_l2()));
}

TEST_CASE("pair seminorm against exhaustive brute force for sin") {
  const double L = 8.0;
  const std::size_t n = 256;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = -L + 2.0 * L * static_cast<double>(i) / n;
    v[i] = std::sin(kPi * x / 4.0);  // wavelength 8, periodic on the domain
  }
  GridFunction g(L, std::move(v));

  double brute = 0.0;
  const double dx = g.dx();
  for (std::size_t lag = 1; lag <= n / 2; ++lag) {
    double dist = lag * dx;
    if (dist < 1.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      double diff = std::fabs(g.at_wrapped(static_cast<std::ptrdiff_t>(i + lag)) - g[i]);
      brute = std::max(brute, diff / std::pow(dist, 0.5));
    }
  }
  double strided = local_norm(g, NormKind::ddot_c(0.5));
  CHECK(strided <= brute * (1.0 + 1e-12));
  CHECK(strided >= brute * 0.98);
}

TEST_CASE("pair seminorm of bounded g stays below twice the sup") {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = smooth_sample(8.0, 256, 5, rng, 2.0);
    CHECK(local_norm(g, NormKind::ddot_c(0.7)) <= 2.0 * g.sup_abs() + 1e-12);
  }
}

TEST_CASE("norm monotonicity chain in gamma") {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = smooth_sample(16.0, 512, 4, rng, 1.5);
    double sup_g1 = derivative(g, 1).sup_abs();
    for (double gamma : {0.5, 0.4}) {
      for (double gp : {gamma, gamma / 2, gamma / 4}) {
        double lo = local_norm(g, NormKind::tilde_hk_gamma(3, gp));
        double hi = local_norm(g, NormKind::tilde_hk_gamma(3, gamma));
        CHECK(lo <= hi + sup_g1 + 1e-10);
        CHECK(hi + sup_g1 <= 2.0 * hi + 1e-10);
      }
    }
  }
}

TEST_CASE("composite norms are assembled from their parts") {
  Rng rng(9);
  auto g = smooth_sample(8.0, 512, 3, rng, 1.0);
  double h3 = local_norm(g, NormKind::tilde_hk(3));
  double parts = local_norm(g, NormKind::tilde_l2());
  for (int j = 1; j <= 3; ++j) parts += local_norm(derivative(g, j), NormKind::tilde_l2());
  CHECK(h3 == doctest::Approx(parts).epsilon(1e-12));

  // derivatives of g enter through the direct higher-order stencils
  double hg = local_norm(g, NormKind::tilde_hk_gamma(3, 0.5));
  double expected = local_norm(g, NormKind::ddot_c(0.5));
  for (int j = 1; j <= 3; ++j) expected += local_norm(derivative(g, j), NormKind::tilde_l2());
  CHECK(hg == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("weighted window norm centered at x0") {
  // closed form for a constant: int c^2 min(1, |x - x0|^-2) over [-L, L)
  const double L = 8.0, c = 2.0;
  auto g = GridFunction::constant(L, 512, c);
  double expected = std::sqrt(c * c * (2.0 + 2.0 * (1.0 - 1.0 / L)));
  CHECK(local_norm(g, NormKind::tilde_l2_x0(0.0)) == doctest::Approx(expected).epsilon(1e-3));
}

TEST_CASE("CkGamma drops the zeroth-order sup and the top Holder piece") {
  Rng rng(13);
  auto g = smooth_sample(8.0, 512, 3, rng, 1.0);
  double expected = derivative(g, 1).sup_abs() + derivative(g, 2).sup_abs() +
                    local_norm(g, NormKind::ddot_c(0.5));
  CHECK(local_norm(g, NormKind::ck_gamma(2, 0.5)) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("norms reject NaN samples") {
  auto g = GridFunction::zeros(8.0, 256);
  g.raw()[10] = std::nan("");
  CHECK_THROWS(local_norm(g, NormKind::tilde_l2()));
}

TEST_CASE("norms reject unresolved unit windows") {
  auto g = GridFunction::zeros(8.0, 16);  // dx = 1 > 0.25
  CHECK_THROWS(local_norm(g, NormKind::tilde_l2()));
}
