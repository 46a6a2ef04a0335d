#include "muskat/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace muskat {

namespace {

// Trapezoid prefix integral of the (periodic) sample vector v with spacing dx.
// P[i] = integral over [x_0, x_i]; P[n] is the full-period integral.
std::vector<double> prefix_integral(const std::vector<double>& v, double dx) {
  const std::size_t n = v.size();
  std::vector<double> p(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double next = v[(i + 1) % n];
    p[i + 1] = p[i] + 0.5 * dx * (v[i] + next);
  }
  return p;
}

// Integral of the piecewise-linear interpolant of v from the left domain
// edge to the (possibly unwrapped) coordinate c.
double prefix_at(const std::vector<double>& v, const std::vector<double>& p, double dx,
                 double half_period, double c) {
  const std::size_t n = v.size();
  const double period = 2.0 * half_period;
  double shifted = c + half_period;
  double wraps = std::floor(shifted / period);
  double local = shifted - wraps * period;  // in [0, period)
  double pos = local / dx;
  std::size_t i = std::min(static_cast<std::size_t>(pos), n - 1);
  double u = pos - static_cast<double>(i);
  double vi = v[i];
  double vn = v[(i + 1) % n];
  double partial = dx * (u * vi + 0.5 * u * u * (vn - vi));
  return wraps * p[n] + p[i] + partial;
}

double window_integral(const std::vector<double>& v, const std::vector<double>& p, double dx,
                       double half_period, double center, double radius) {
  return prefix_at(v, p, dx, half_period, center + radius) -
         prefix_at(v, p, dx, half_period, center - radius);
}

std::vector<double> squared(const GridFunction& g) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = g[i] * g[i];
  return v;
}

double windowed_l2_sup_of(const GridFunction& grid_ref, const std::vector<double>& values) {
  const double dx = grid_ref.dx();
  if (dx > 0.25) throw std::invalid_argument("norms: need dx <= 0.25 to resolve unit windows");
  if (grid_ref.half_period() < 1.0)
    throw std::invalid_argument("norms: need L >= 1 for length-2 windows");
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) sq[i] = values[i] * values[i];
  auto p = prefix_integral(sq, dx);
  double best = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    double w = window_integral(sq, p, dx, grid_ref.half_period(), grid_ref.x(i), 1.0);
    best = std::max(best, w);
  }
  return std::sqrt(std::max(best, 0.0));
}

double sup_abs(const GridFunction& g) { return g.sup_abs(); }

void require_finite(const GridFunction& g) {
  if (!g.all_finite()) throw std::invalid_argument("norms: NaN/Inf in samples");
}

}  // namespace

double windowed_l2_sup(const GridFunction& g) { return windowed_l2_sup_of(g, g.raw()); }

double holder_seminorm(const GridFunction& g, double alpha, double min_distance) {
  const std::size_t n = g.size();
  const double dx = g.dx();
  if (min_distance > 0.0 && g.half_period() < min_distance)
    throw std::invalid_argument("norms: domain too short for the pair separation");
  std::size_t k_min = 1;
  if (min_distance > 0.0)
    k_min = static_cast<std::size_t>(std::ceil(min_distance / dx - 1e-12));
  const std::size_t k_max = n / 2;
  if (k_min > k_max) return 0.0;

  std::vector<std::size_t> lags;
  std::size_t k = k_min;
  while (k <= k_max && k < k_min + 64) lags.push_back(k++);
  while (k <= k_max) {
    lags.push_back(k);
    std::size_t next = k + std::max<std::size_t>(1, k / 16);
    k = next;
  }
  if (lags.empty() || lags.back() != k_max) lags.push_back(k_max);

  double best = 0.0;
  for (std::size_t lag : lags) {
    double maxdiff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double d = std::fabs(g.at_wrapped(static_cast<std::ptrdiff_t>(i + lag)) - g[i]);
      maxdiff = std::max(maxdiff, d);
    }
    double dist = static_cast<double>(lag) * dx;
    best = std::max(best, maxdiff / std::pow(dist, alpha));
  }
  return best;
}

double local_norm(const GridFunction& g, const NormKind& kind) {
  require_finite(g);
  using Tag = NormKind::Tag;
  switch (kind.tag) {
    case Tag::TildeL2:
      return windowed_l2_sup(g);
    case Tag::TildeHk: {
      if (kind.k < 0 || kind.k > 3) throw std::invalid_argument("TildeHk: k must be 0..3");
      double total = windowed_l2_sup(g);
      for (int j = 1; j <= kind.k; ++j) total += windowed_l2_sup(derivative(g, j));
      return total;
    }
    case Tag::DdotC: {
      if (!(kind.alpha > 0.0 && kind.alpha <= 1.0))
        throw std::invalid_argument("DdotC: alpha must lie in (0,1]");
      return holder_seminorm(g, kind.alpha, 1.0);
    }
    case Tag::TildeHkGamma: {
      if (kind.k < 1 || kind.k > 3) throw std::invalid_argument("TildeHkGamma: k must be 1..3");
      if (!(kind.gamma > 0.0 && kind.gamma <= 1.0))
        throw std::invalid_argument("TildeHkGamma: gamma must lie in (0,1]");
      GridFunction g1 = derivative(g, 1);
      double total = windowed_l2_sup(g1);
      for (int j = 2; j <= kind.k; ++j) total += windowed_l2_sup(derivative(g, j));
      return total + holder_seminorm(g, 1.0 - kind.gamma, 1.0);
    }
    case Tag::CkGammaHolder: {
      if (kind.k < 0 || kind.k > 3) throw std::invalid_argument("CkGammaHolder: k must be 0..3");
      double total = sup_abs(g);
      GridFunction top = g;
      for (int j = 1; j <= kind.k; ++j) {
        top = derivative(g, j);
        total += sup_abs(top);
      }
      return total + holder_seminorm(top, kind.alpha, 0.0);
    }
    case Tag::CkGammaGamma: {
      if (kind.k < 1 || kind.k > 3) throw std::invalid_argument("CkGammaGamma: k must be 1..3");
      GridFunction g1 = derivative(g, 1);
      NormKind inner = NormKind::ck_gamma_holder(kind.k - 1, kind.gamma);
      return local_norm(g1, inner) + holder_seminorm(g, 1.0 - kind.gamma, 1.0);
    }
    case Tag::CkGamma: {
      if (kind.k < 1 || kind.k > 3) throw std::invalid_argument("CkGamma: k must be 1..3");
      double total = 0.0;
      for (int j = 1; j <= kind.k; ++j) total += sup_abs(derivative(g, j));
      return total + holder_seminorm(g, 1.0 - kind.gamma, 1.0);
    }
    case Tag::TildeL2Mu: {
      if (kind.mu < 0.0) throw std::invalid_argument("TildeL2Mu: mu must be >= 0");
      std::vector<double> weighted(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        double w = std::sqrt(1.0 + std::max(kind.mu - std::fabs(g.x(i)), 0.0));
        weighted[i] = w * g[i];
      }
      return windowed_l2_sup_of(g, weighted);
    }
    case Tag::TildeL2X0: {
      auto sq = squared(g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        double d = std::fabs(g.x(i) - kind.x0);
        sq[i] *= std::min(1.0, 1.0 / (d * d));
      }
      auto p = prefix_integral(sq, g.dx());
      return std::sqrt(std::max(p.back(), 0.0));
    }
  }
  throw std::logic_error("local_norm: unreachable");
}

GridFunction maximal_function(const GridFunction& g) {
  const std::size_t n = g.size();
  const double dx = g.dx();
  const double L = g.half_period();
  std::vector<double> av(n);
  for (std::size_t i = 0; i < n; ++i) av[i] = std::fabs(g[i]);
  auto p = prefix_integral(av, dx);

  std::vector<double> radii;
  for (double r = dx; r <= L * (1.0 + 1e-12); r *= 2.0) radii.push_back(std::min(r, L));
  if (radii.empty() || radii.back() < L) radii.push_back(L);

  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = 0.0;
    for (double r : radii) {
      double avg = window_integral(av, p, dx, L, g.x(i), r) / (2.0 * r);
      best = std::max(best, avg);
    }
    out[i] = best;
  }
  return GridFunction(L, std::move(out));
}

}  // namespace muskat
