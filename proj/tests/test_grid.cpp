#include <cmath>
#include <cstdio>
#include <numbers>

#include "doctest.h"
#include "muskat/grid.hpp"
#include "muskat/profiles.hpp"

using namespace muskat;
namespace {
constexpr double kPi = std::numbers::pi;

GridFunction sampled(double L, std::size_t n, double (*fn)(double)) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = fn(-L + 2.0 * L * static_cast<double>(i) / n);
  return GridFunction(L, std::move(v));
}
}  // namespace

TEST_CASE("construction invariants") {
  CHECK_THROWS(GridFunction(8.0, std::vector<double>(8, 0.0)));  // n < 16
  CHECK_THROWS(GridFunction(-1.0, std::vector<double>(32, 0.0)));
  std::vector<double> bad(32, 0.0);
  bad[5] = std::nan("");
  CHECK_THROWS(GridFunction(8.0, std::move(bad)));
}

TEST_CASE("periodic indexing and evaluation") {
  auto g = sampled(8.0, 256, [](double x) { return std::sin(kPi * x / 8.0); });
  CHECK(g.at_wrapped(-1) == g[255]);
  CHECK(g.at_wrapped(256) == g[0]);
  // dyadic grid: x and x + 2L land on identical stencils
  for (double x : {-3.977, 0.1253, 6.5}) CHECK(g.interpolate(x) == g.interpolate(x + 16.0));
}

TEST_CASE("interpolation reproduces cubics away from the wrap seam") {
  auto g = sampled(8.0, 512, [](double x) { return ((x - 1.0) * x + 2.0) * x - 0.5; });
  for (double x : {-5.3, -1.22, 0.4447, 3.89, 5.99}) {
    double exact = ((x - 1.0) * x + 2.0) * x - 0.5;
    CHECK(g.interpolate(x) == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("derivatives of constants vanish") {
  auto g = GridFunction::constant(8.0, 64, 4.2);
  for (int k = 1; k <= 4; ++k) {
    auto d = derivative(g, k);
    CHECK(d.sup_abs() <= 1e-12);
  }
}

TEST_CASE("derivative matches analytic sin derivatives") {
  const double L = 4.0 * kPi;
  auto g = sampled(L, 512, [](double x) { return std::sin(x); });
  auto d1 = derivative(g, 1);
  auto d2 = derivative(g, 2);
  double e1 = 0.0, e2 = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    e1 = std::max(e1, std::fabs(d1[i] - std::cos(g.x(i))));
    e2 = std::max(e2, std::fabs(d2[i] + std::sin(g.x(i))));
  }
  CHECK(e1 < 1e-6);
  CHECK(e2 < 1e-5);
}

TEST_CASE("derivative self-convergence order at least 3.8") {
  const double L = 4.0 * kPi;
  for (int k = 1; k <= 2; ++k) {
    double errs[3];
    std::size_t idx = 0;
    for (std::size_t n : {128, 256, 512}) {
      auto g = sampled(L, n, [](double x) { return std::sin(x); });
      auto d = derivative(g, k);
      double e = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        double exact = k == 1 ? std::cos(g.x(i)) : -std::sin(g.x(i));
        e = std::max(e, std::fabs(d[i] - exact));
      }
      errs[idx++] = e;
    }
    double order1 = std::log2(errs[0] / errs[1]);
    double order2 = std::log2(errs[1] / errs[2]);
    CHECK(order1 >= 3.8);
    CHECK(order2 >= 3.8);
  }
}

TEST_CASE("csv round trip is bit exact") {
  auto g = sampled(8.0, 64, [](double x) { return std::sin(1.7 * x) + 0.3 * x * x / 64.0; });
  std::string path = "grid_roundtrip_test.csv";
  write_csv(g, path);
  auto back = read_csv(path);
  REQUIRE(back.size() == g.size());
  CHECK(back.half_period() == g.half_period());
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(back[i] == g[i]);
  std::remove(path.c_str());
}

TEST_CASE("grid arithmetic requires matching grids") {
  auto a = GridFunction::zeros(8.0, 64);
  auto b = GridFunction::zeros(8.0, 128);
  CHECK_THROWS(a + b);
}

TEST_CASE("profiles evaluate pointwise and respect geometry ranges") {
  auto ones = sample_profile(ConstantProfile{1.0}, HalfPlane{}, 16.0, 256);
  for (std::size_t i = 0; i < ones.size(); ++i) CHECK(ones[i] == 1.0);

  auto sine = sample_profile(SineProfile{1e-4, 1.0, 0.0}, Plane{}, 16.0, 256);
  for (std::size_t i = 0; i < sine.size(); ++i)
    CHECK(sine[i] == doctest::Approx(1e-4 * std::sin(sine.x(i))).epsilon(1e-14));

  CHECK_THROWS(sample_profile(ConstantProfile{-1.0}, HalfPlane{}, 16.0, 256));
  CHECK_THROWS(sample_profile(ConstantProfile{3.0}, Strip{2.0}, 16.0, 256));
}

TEST_CASE("invasion profile: flat zero gap, nonnegative, C2 bridge") {
  InvasionProfile inv{1.0, 1.0, -1.0, 1.0, 0.5};
  auto f = sample_profile(inv, HalfPlane{}, 8.0, 1024);
  CHECK(f.min() == 0.0);
  double at_gap = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(f[i] >= 0.0);
    if (std::fabs(f.x(i)) <= 1.0) at_gap = std::max(at_gap, std::fabs(f[i]));
  }
  CHECK(at_gap == 0.0);

  // f'' stays bounded and its second differences converge: the quintic
  // bridge is C^2 across the shoulder joints
  double sup_fxx_1 = derivative(f, 2).sup_abs();
  auto f2 = sample_profile(inv, HalfPlane{}, 8.0, 2048);
  double sup_fxx_2 = derivative(f2, 2).sup_abs();
  CHECK(sup_fxx_1 == doctest::Approx(sup_fxx_2).epsilon(0.02));
  // a C^1-only joint would double the third difference per refinement;
  // here it converges to the bounded sup of the quintic's f'''
  double sup_f3_1 = derivative(f, 3).sup_abs();
  double sup_f3_2 = derivative(f2, 3).sup_abs();
  CHECK(sup_f3_2 <= sup_f3_1 * 1.25);
}
