#include "muskat/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace muskat {

namespace {
constexpr double kPi = std::numbers::pi;
}

double theta_kernel(double y, double r, double l) {
  if (!(l > 0.0)) throw std::invalid_argument("theta_kernel: strip height must be positive");
  const double t = kPi * y / l;
  const double s = kPi * r / l;
  if (std::fabs(t) > 30.0) {
    const double sign = t > 0.0 ? 1.0 : -1.0;
    const double e = std::exp(-std::fabs(t));
    const double c = std::cos(s);
    return sign * (kPi / (2.0 * l)) * (1.0 + 2.0 * c * e + (4.0 * c * c - 2.0) * e * e);
  }
  const double denom = std::cosh(t) - std::cos(s);
  if (denom == 0.0)
    throw std::domain_error("theta_kernel: singular lattice point (y, r) = (0, 2lk)");
  return (kPi / (2.0 * l)) * std::sinh(t) / denom;
}

double lattice_theta(double y, double r, double l, std::size_t terms) {
  if (!(l > 0.0)) throw std::invalid_argument("lattice_theta: strip height must be positive");
  if (terms < 1) throw std::invalid_argument("lattice_theta: need at least one term");
  double sum = y / (y * y + r * r);
  for (std::size_t n = 1; n <= terms; ++n) {
    double up = r - 2.0 * l * static_cast<double>(n);
    double dn = r + 2.0 * l * static_cast<double>(n);
    sum += y / (y * y + up * up) + y / (y * y + dn * dn);
  }
  return sum;
}

QuadratureSpec QuadratureSpec::up_to(double y_max, double dx, double half_period) {
  if (!(y_max > 0.0)) throw std::invalid_argument("quadrature: y_max must be positive");
  if (y_max > half_period * (1.0 + 1e-12))
    throw std::invalid_argument("quadrature: y_max beyond the half period would double-count");
  QuadratureSpec q;
  q.dx = dx;
  q.count = static_cast<std::size_t>(std::floor(y_max / dx + 1e-9));
  if (q.count == 0) throw std::invalid_argument("quadrature: no nodes below y_max");
  return q;
}

PvEvaluator::PvEvaluator(const Geometry& geom, RhsForm form, const GridFunction& f, double y_max)
    : geom_(geom), form_(form), f_(&f) {
  if (form == RhsForm::Alternate && !is_half_plane(geom))
    throw std::invalid_argument("alternate form is defined on the half-plane only");
  if (auto violation = range_violation(geom, f))
    throw std::invalid_argument("pv_integral: " + *violation);
  if (is_strip(geom)) strip_l_ = strip_height(geom);
  quad_ = QuadratureSpec::up_to(y_max, f.dx(), f.half_period());

  GridFunction d1 = derivative(f, 1);
  fx_.assign(d1.raw().begin(), d1.raw().end());

  const std::size_t n = f.size();
  f_half_.resize(n);
  fx_half_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto idx = static_cast<std::ptrdiff_t>(k);
    f_half_[k] = (-f.at_wrapped(idx - 1) + 9.0 * f.at_wrapped(idx) + 9.0 * f.at_wrapped(idx + 1) -
                  f.at_wrapped(idx + 2)) /
                 16.0;
    fx_half_[k] = (-d1.at_wrapped(idx - 1) + 9.0 * d1.at_wrapped(idx) +
                   9.0 * d1.at_wrapped(idx + 1) - d1.at_wrapped(idx + 2)) /
                  16.0;
  }
}

double PvEvaluator::fh(std::ptrdiff_t k) const {
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f_half_.size());
  k %= n;
  if (k < 0) k += n;
  return f_half_[static_cast<std::size_t>(k)];
}

double PvEvaluator::gh(std::ptrdiff_t k) const {
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(fx_half_.size());
  k %= n;
  if (k < 0) k += n;
  return fx_half_[static_cast<std::size_t>(k)];
}

double PvEvaluator::paired_integrand(std::size_t i, std::size_t j) const {
  const double y = quad_.node(j);
  const auto ii = static_cast<std::ptrdiff_t>(i);
  const auto jj = static_cast<std::ptrdiff_t>(j);
  const double f0 = (*f_)[i];
  const double g0 = fx_[i];
  const double fm = fh(ii - jj - 1);  // f(x - y)
  const double fp = fh(ii + jj);      // f(x + y)
  const double gm = gh(ii - jj - 1);
  const double gp = gh(ii + jj);

  if (is_strip(geom_)) {
    double v = (g0 - gm) * theta_kernel(y, f0 - fm, strip_l_) +
               (g0 + gm) * theta_kernel(y, f0 + fm, strip_l_) +
               (g0 - gp) * theta_kernel(-y, f0 - fp, strip_l_) +
               (g0 + gp) * theta_kernel(-y, f0 + fp, strip_l_);
    return v;
  }

  if (form_ == RhsForm::Alternate) {
    const double dm = f0 - fm, sm = f0 + fm;
    const double dp = f0 - fp, sp = f0 + fp;
    return (y * g0 - dm) / (y * y + dm * dm) + (y * g0 - sm) / (y * y + sm * sm) +
           (-y * g0 - dp) / (y * y + dp * dp) + (-y * g0 - sp) / (y * y + sp * sp);
  }

  const double dm = f0 - fm;
  const double dp = f0 - fp;
  double v = (g0 - gm) * y / (y * y + dm * dm) - (g0 - gp) * y / (y * y + dp * dp);
  if (is_half_plane(geom_)) {
    const double sm = f0 + fm;
    const double sp = f0 + fp;
    v += (g0 + gm) * y / (y * y + sm * sm) - (g0 + gp) * y / (y * y + sp * sp);
  }
  return v;
}

double PvEvaluator::at(std::size_t i) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < quad_.count; ++j) sum += paired_integrand(i, j);
  sum *= quad_.dx;

  if (form_ == RhsForm::Alternate) {
    const double f0 = (*f_)[i];
    const double Y = quad_.y_max();
    // Reads at x -+ Y land on grid nodes because Y is a multiple of dx.
    const auto ii = static_cast<std::ptrdiff_t>(i);
    const auto off = static_cast<std::ptrdiff_t>(quad_.count);
    const double fmy = f_->at_wrapped(ii - off);
    const double fpy = f_->at_wrapped(ii + off);
    // Exact tail of the arctan-derivative part beyond the truncation radius;
    // the remaining (primary-kernel) tail cancels in the +-y pairing for data
    // constant in the far field.
    sum -= std::atan((f0 + fmy) / Y) + std::atan((f0 + fpy) / Y) + std::atan((f0 - fmy) / Y) +
           std::atan((f0 - fpy) / Y);
    if (f0 > 0.0) sum += kPi;
  }

  if (!std::isfinite(sum)) throw std::runtime_error("pv_integral: non-finite partial sum at node " +
                                                    std::to_string(i));
  return sum;
}

std::vector<double> PvEvaluator::all(const WorkerPool& pool) const {
  std::vector<double> out(nodes());
  pool.parallel_for(0, nodes(), [&](std::size_t i) { out[i] = at(i); });
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!std::isfinite(out[i]))
      throw std::runtime_error("pv_integral: non-finite value at node " + std::to_string(i));
  return out;
}

double pv_integral(const Geometry& geom, RhsForm form, const GridFunction& f, std::size_t node,
                   double y_max) {
  return PvEvaluator(geom, form, f, y_max).at(node);
}

std::vector<double> pv_integral_all(const Geometry& geom, RhsForm form, const GridFunction& f,
                                    double y_max, const WorkerPool& pool) {
  return PvEvaluator(geom, form, f, y_max).all(pool);
}

double paired_integrand_generic(const Geometry& geom, RhsForm form, const GridFunction& f,
                                const GridFunction& fx, double x, double y) {
  if (y == 0.0) throw std::invalid_argument("paired integrand: y must be nonzero");
  const double f0 = f.interpolate(x);
  const double g0 = fx.interpolate(x);
  const double fm = f.interpolate(x - y);
  const double fp = f.interpolate(x + y);
  const double gm = fx.interpolate(x - y);
  const double gp = fx.interpolate(x + y);

  if (is_strip(geom)) {
    const double l = strip_height(geom);
    return (g0 - gm) * theta_kernel(y, f0 - fm, l) + (g0 + gm) * theta_kernel(y, f0 + fm, l) +
           (g0 - gp) * theta_kernel(-y, f0 - fp, l) + (g0 + gp) * theta_kernel(-y, f0 + fp, l);
  }
  if (form == RhsForm::Alternate) {
    if (!is_half_plane(geom))
      throw std::invalid_argument("alternate form is defined on the half-plane only");
    const double dm = f0 - fm, sm = f0 + fm, dp = f0 - fp, sp = f0 + fp;
    return (y * g0 - dm) / (y * y + dm * dm) + (y * g0 - sm) / (y * y + sm * sm) +
           (-y * g0 - dp) / (y * y + dp * dp) + (-y * g0 - sp) / (y * y + sp * sp);
  }
  const double dm = f0 - fm, dp = f0 - fp;
  double v = (g0 - gm) * y / (y * y + dm * dm) - (g0 - gp) * y / (y * y + dp * dp);
  if (is_half_plane(geom)) {
    const double sm = f0 + fm, sp = f0 + fp;
    v += (g0 + gm) * y / (y * y + sm * sm) - (g0 + gp) * y / (y * y + sp * sp);
  }
  return v;
}

InterfaceVelocity velocity_on_interface(const GridFunction& f, double y_max,
                                        const WorkerPool& pool) {
  if (f.min() < 0.0) throw std::invalid_argument("velocity: half-plane requires f >= 0");
  const QuadratureSpec quad = QuadratureSpec::up_to(y_max, f.dx(), f.half_period());
  GridFunction fx = derivative(f, 1);

  const std::size_t n = f.size();
  std::vector<double> f_half(n), g_half(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto idx = static_cast<std::ptrdiff_t>(k);
    f_half[k] = (-f.at_wrapped(idx - 1) + 9.0 * f.at_wrapped(idx) + 9.0 * f.at_wrapped(idx + 1) -
                 f.at_wrapped(idx + 2)) /
                16.0;
    g_half[k] = (-fx.at_wrapped(idx - 1) + 9.0 * fx.at_wrapped(idx) +
                 9.0 * fx.at_wrapped(idx + 1) - fx.at_wrapped(idx + 2)) /
                16.0;
  }
  auto wrap = [n](std::ptrdiff_t k) {
    std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n);
    k %= m;
    if (k < 0) k += m;
    return static_cast<std::size_t>(k);
  };

  InterfaceVelocity vel;
  vel.u1.assign(n, 0.0);
  vel.u2.assign(n, 0.0);
  pool.parallel_for(0, n, [&](std::size_t i) {
    const double f0 = f[i];
    double a1 = 0.0, a2 = 0.0;
    for (std::size_t j = 0; j < quad.count; ++j) {
      const double s = quad.node(j);
      const auto ii = static_cast<std::ptrdiff_t>(i);
      const auto jj = static_cast<std::ptrdiff_t>(j);
      // integration points y = x - s and y = x + s
      const double fm = f_half[wrap(ii - jj - 1)], gm = g_half[wrap(ii - jj - 1)];
      const double fp = f_half[wrap(ii + jj)], gp = g_half[wrap(ii + jj)];
      const double Dm = s * s + (f0 - fm) * (f0 - fm);
      const double Sm = s * s + (f0 + fm) * (f0 + fm);
      const double Dp = s * s + (f0 - fp) * (f0 - fp);
      const double Sp = s * s + (f0 + fp) * (f0 + fp);
      // mirrored kernel sum -+ (f(x) +- f(y), y - x) / (...) weighted by f'(y)
      a1 += gm * ((f0 - fm) / Dm - (f0 + fm) / Sm) + gp * ((f0 - fp) / Dp - (f0 + fp) / Sp);
      a2 += gm * (s / Sm - s / Dm) + gp * (s / Dp - s / Sp);
    }
    vel.u1[i] = a1 * quad.dx;
    vel.u2[i] = a2 * quad.dx;
  });
  return vel;
}

double tangential_multiple(const GridFunction& f, std::size_t node, double y_max) {
  const QuadratureSpec quad = QuadratureSpec::up_to(y_max, f.dx(), f.half_period());
  const std::size_t n = f.size();
  const double f0 = f[node];
  auto half = [&](std::ptrdiff_t k) {
    std::ptrdiff_t m = static_cast<std::ptrdiff_t>(n);
    k %= m;
    if (k < 0) k += m;
    auto idx = k;
    return (-f.at_wrapped(idx - 1) + 9.0 * f.at_wrapped(idx) + 9.0 * f.at_wrapped(idx + 1) -
            f.at_wrapped(idx + 2)) /
           16.0;
  };
  double sum = 0.0;
  for (std::size_t j = 0; j < quad.count; ++j) {
    const double s = quad.node(j);
    const auto ii = static_cast<std::ptrdiff_t>(node);
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const double fm = half(ii - jj - 1);  // y = x - s
    const double fp = half(ii + jj);      // y = x + s
    sum += s / (s * s + (f0 - fm) * (f0 - fm)) + s / (s * s + (f0 + fm) * (f0 + fm));
    sum += -s / (s * s + (f0 - fp) * (f0 - fp)) - s / (s * s + (f0 + fp) * (f0 + fp));
  }
  return sum * quad.dx;
}

}  // namespace muskat
