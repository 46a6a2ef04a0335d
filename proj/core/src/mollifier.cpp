#include "muskat/mollifier.hpp"

#include <cmath>
#include <stdexcept>

namespace muskat {

namespace {

double profile(double beta, double u) {
  double a = std::fabs(u);
  if (a >= 1.0) return 0.0;
  return std::exp(beta * u * u / (u * u - 1.0));
}

// Unit-profile mass as a function of beta.  The integrand is smooth with all
// derivatives vanishing at +-1, so the midpoint rule converges faster than
// any power of the step.
double unit_mass(double beta) {
  const int n = 20000;
  const double h = 2.0 / n;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    double u = -1.0 + (j + 0.5) * h;
    sum += profile(beta, u);
  }
  return sum * h;
}

}  // namespace

Mollifier Mollifier::build(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::invalid_argument("Mollifier: epsilon must lie in (0, 1/2)");

  // unit_mass decreases continuously from 2 (beta -> 0) to 0 (beta -> inf),
  // so there is exactly one root of unit_mass(beta) = 1.
  double lo = 1e-8, hi = 64.0;
  if (!(unit_mass(lo) > 1.0 && unit_mass(hi) < 1.0))
    throw std::runtime_error("Mollifier: mass-in-beta bracket failed");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (unit_mass(mid) > 1.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-15) break;
  }

  Mollifier m;
  m.beta_ = 0.5 * (lo + hi);
  m.epsilon_ = epsilon;
  m.mass_check_ = unit_mass(m.beta_);

  // phi'(u) = phi(u) * (-2 beta u / (1-u^2)^2); measure its sup on a fine grid.
  double sup = 0.0;
  const int n = 40000;
  for (int j = 1; j < n; ++j) {
    double u = static_cast<double>(j) / n;
    double d = 1.0 - u * u;
    double p = profile(m.beta_, u) * 2.0 * m.beta_ * u / (d * d);
    sup = std::max(sup, std::fabs(p));
  }
  m.phi_prime_sup_ = sup;

  const int table_n = 257;
  m.table_.resize(table_n);
  for (int j = 0; j < table_n; ++j) {
    double x = -epsilon + 2.0 * epsilon * j / (table_n - 1);
    m.table_[j] = m(x);
  }
  return m;
}

double Mollifier::unit_profile(double u) const { return profile(beta_, u); }

double Mollifier::operator()(double x) const { return profile(beta_, x / epsilon_) / epsilon_; }

GridFunction mollify(const GridFunction& g, const Mollifier& m) {
  const double dx = g.dx();
  if (m.epsilon() < 2.0 * dx)
    throw std::invalid_argument("mollify: epsilon < 2*dx, mollifier unresolved by the grid");
  const std::ptrdiff_t reach = static_cast<std::ptrdiff_t>(std::floor(m.epsilon() / dx));
  std::vector<double> w(static_cast<std::size_t>(2 * reach + 1));
  double total = 0.0;
  for (std::ptrdiff_t j = -reach; j <= reach; ++j) {
    double wj = m(static_cast<double>(j) * dx);
    w[static_cast<std::size_t>(j + reach)] = wj;
    total += wj;
  }
  for (double& wj : w) wj /= total;

  const std::size_t n = g.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::ptrdiff_t j = -reach; j <= reach; ++j)
      acc += w[static_cast<std::size_t>(j + reach)] *
             g.at_wrapped(static_cast<std::ptrdiff_t>(i) - j);
    out[i] = acc;
  }
  return GridFunction(g.half_period(), std::move(out));
}

}  // namespace muskat
