#include <cmath>

#include "doctest.h"
#include "muskat/norms.hpp"
#include "muskat/rng.hpp"

using namespace muskat;
namespace {

GridFunction indicator_unit_interval(double L, std::size_t n) {
  std::vector<double> v(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double x = -L + 2.0 * L * static_cast<double>(i) / n;
    if (std::fabs(x) <= 1.0) v[i] = 1.0;
  }
  return GridFunction(L, std::move(v));
}

// Oracle: averages over every grid radius, not just dyadic ones.
double brute_max_average(const GridFunction& g, std::size_t node) {
  const std::size_t n = g.size();
  double best = 0.0;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    double r = k * g.dx();
    double sum = 0.0;
    for (std::size_t j = 0; j < 2 * k; ++j) {
      auto idx = static_cast<std::ptrdiff_t>(node + j) - static_cast<std::ptrdiff_t>(k);
      double a = std::fabs(g.at_wrapped(idx));
      double b = std::fabs(g.at_wrapped(idx + 1));
      sum += 0.5 * (a + b) * g.dx();
    }
    best = std::max(best, sum / (2.0 * r));
  }
  return best;
}

}  // namespace

TEST_CASE("maximal function of the unit-interval indicator") {
  const double L = 8.0;
  const std::size_t n = 512;  // dx = 1/32, radii reach L dyadically
  auto g = indicator_unit_interval(L, n);
  auto M = maximal_function(g);

  std::size_t at0 = n / 2;  // x = 0
  CHECK(M[at0] == doctest::Approx(1.0).epsilon(1e-9));

  // x = 2: all-radii sup is 1/3 (attained at radius 3); the dyadic scan
  // must land within its factor-2 bracket below that.
  std::size_t at2 = at0 + static_cast<std::size_t>(std::round(2.0 / g.dx()));
  double brute = brute_max_average(g, at2);
  CHECK(brute == doctest::Approx(1.0 / 3.0).epsilon(0.03));
  CHECK(M[at2] <= brute * (1.0 + 1e-9));
  CHECK(M[at2] >= 0.5 * brute * (1.0 - 1e-9));
}

TEST_CASE("maximal function of a constant is its absolute value") {
  auto g = GridFunction::constant(8.0, 128, -0.7);
  auto M = maximal_function(g);
  for (std::size_t i = 0; i < M.size(); ++i) CHECK(M[i] == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("maximal function dominates |g| up to grid smearing and is sublinear") {
  Rng rng(17);
  const double L = 8.0;
  const std::size_t n = 256;
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = rng.uniform(-1.0, 1.0);
    b[i] = rng.uniform(-1.0, 1.0);
  }
  GridFunction ga(L, a), gb(L, b);
  std::vector<double> sum(n);
  for (std::size_t i = 0; i < n; ++i) sum[i] = ga[i] + gb[i];
  GridFunction gs(L, sum);

  auto Ma = maximal_function(ga);
  auto Mb = maximal_function(gb);
  auto Ms = maximal_function(gs);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(Ms[i] <= Ma[i] + Mb[i] + 1e-12);
    // smallest radius averages the two neighboring cells
    double smeared = 0.25 * (std::fabs(ga.at_wrapped(static_cast<std::ptrdiff_t>(i) - 1)) +
                             2.0 * std::fabs(ga[i]) +
                             std::fabs(ga.at_wrapped(static_cast<std::ptrdiff_t>(i) + 1)));
    CHECK(Ma[i] >= smeared - 1e-12);
  }
}
