#include "muskat/identities.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "muskat/kernels.hpp"

namespace muskat {

namespace {

// Primitives and their hand derivatives for the three cancellation
// identities.  D = y^2 + 4a^2 throughout.
//
//   S4~(y) = 8bc^2 y / D^2 - 128 a^2 b c^2 y / D^3
//   y S4~(y) = -d/dy [ 8bc^2 y^3 / D^2 ]
//
//   P4~(y) = 16bc^2 y / D^2 - 128 a b^3 c y / D^3
//   Q4~(y) = 16bc^2 y / D^3 - 192 a b^3 c y / D^4
//   3y P4~ - 4y^3 Q4~ = 16 [ d/dy(8abc(2ac-b^2) y^3/D^3)
//                          - d/dy(3bc^2 y^3/D^2) + d/dy(4bc^2 y^5/D^3) ]
//
//   U4~(y) = 128 a b^3 c y / D^3 + 32 b^5 y / D^3 - 768 a^2 b^5 y / D^4
//   V4~(y) = 128 a b^3 c y / D^4 + 32 b^5 y / D^4 - 1024 a^2 b^5 y / D^5
//   2y^3 V4~ - y U4~ = 32 [ -d/dy(2b^3(4ac+b^2) y^5/(3 D^4))
//                          + d/dy(b^3(4ac+b^2) y^3/(3 D^3))
//                          - d/dy(16a^2 b^3(2ac-b^2) y^3/(3 D^4)) ]

struct Core {
  double a, b, c;
  double D(double y) const { return y * y + 4.0 * a * a; }

  double S4t(double y) const {
    double d = D(y);
    return 8.0 * b * c * c * y / (d * d) - 128.0 * a * a * b * c * c * y / (d * d * d);
  }
  double P4t(double y) const {
    double d = D(y);
    return 16.0 * b * c * c * y / (d * d) - 128.0 * a * b * b * b * c * y / (d * d * d);
  }
  double Q4t(double y) const {
    double d = D(y);
    return 16.0 * b * c * c * y / (d * d * d) -
           192.0 * a * b * b * b * c * y / (d * d * d * d);
  }
  double U4t(double y) const {
    double d = D(y);
    double b3 = b * b * b;
    return 128.0 * a * b3 * c * y / (d * d * d) + 32.0 * b3 * b * b * y / (d * d * d) -
           768.0 * a * a * b3 * b * b * y / (d * d * d * d);
  }
  double V4t(double y) const {
    double d = D(y);
    double b3 = b * b * b;
    return 128.0 * a * b3 * c * y / (d * d * d * d) + 32.0 * b3 * b * b * y / (d * d * d * d) -
           1024.0 * a * a * b3 * b * b * y / (d * d * d * d * d);
  }

  // d/dy of y^p / D^q for the needed (p, q) pairs.
  double d_y3_D2(double y) const {
    double d = D(y);
    return (12.0 * a * a * y * y - y * y * y * y) / (d * d * d);
  }
  double d_y3_D3(double y) const {
    double d = D(y);
    return (12.0 * a * a * y * y - 3.0 * y * y * y * y) / (d * d * d * d);
  }
  double d_y5_D3(double y) const {
    double d = D(y);
    double y4 = y * y * y * y;
    return (20.0 * a * a * y4 - y4 * y * y) / (d * d * d * d);
  }
  double d_y3_D4(double y) const {
    double d = D(y);
    return (12.0 * a * a * y * y - 5.0 * y * y * y * y) / (d * d * d * d * d);
  }
  double d_y5_D4(double y) const {
    double d = D(y);
    double y4 = y * y * y * y;
    return (20.0 * a * a * y4 - 3.0 * y4 * y * y) / (d * d * d * d * d);
  }

  double lhs(CancellationKind kind, double y) const {
    switch (kind) {
      case CancellationKind::S4:
        return y * S4t(y);
      case CancellationKind::PQ:
        return 3.0 * y * P4t(y) - 4.0 * y * y * y * Q4t(y);
      case CancellationKind::UV:
        return 2.0 * y * y * y * V4t(y) - y * U4t(y);
    }
    return 0.0;
  }

  double rhs_analytic(CancellationKind kind, double y) const {
    switch (kind) {
      case CancellationKind::S4:
        return -8.0 * b * c * c * d_y3_D2(y);
      case CancellationKind::PQ:
        return 16.0 * (8.0 * a * b * c * (2.0 * a * c - b * b) * d_y3_D3(y) -
                       3.0 * b * c * c * d_y3_D2(y) + 4.0 * b * c * c * d_y5_D3(y));
      case CancellationKind::UV: {
        double b3 = b * b * b;
        double p = 4.0 * a * c + b * b;
        double q = 2.0 * a * c - b * b;
        return 32.0 * (-(2.0 / 3.0) * b3 * p * d_y5_D4(y) + (1.0 / 3.0) * b3 * p * d_y3_D3(y) -
                       (16.0 / 3.0) * a * a * b3 * q * d_y3_D4(y));
      }
    }
    return 0.0;
  }

  // Primitive whose y-derivative is (minus) the identity's right-hand side.
  double primitive(CancellationKind kind, double y) const {
    double d = D(y);
    switch (kind) {
      case CancellationKind::S4:
        return 8.0 * b * c * c * y * y * y / (d * d);
      case CancellationKind::PQ:
        // sign convention: rhs = +16 d/dy(...), so hand back the + primitive
        return 16.0 * (8.0 * a * b * c * (2.0 * a * c - b * b) * y * y * y / (d * d * d) -
                       3.0 * b * c * c * y * y * y / (d * d) +
                       4.0 * b * c * c * y * y * y * y * y / (d * d * d));
      case CancellationKind::UV: {
        double b3 = b * b * b;
        double p = 4.0 * a * c + b * b;
        double q = 2.0 * a * c - b * b;
        double y3 = y * y * y;
        return 32.0 * (-(2.0 / 3.0) * b3 * p * y3 * y * y / (d * d * d * d) +
                       (1.0 / 3.0) * b3 * p * y3 / (d * d * d) -
                       (16.0 / 3.0) * a * a * b3 * q * y3 / (d * d * d * d));
      }
    }
    return 0.0;
  }
};

double fd5(const Core& core, CancellationKind kind, double y, double h) {
  auto F = [&](double z) { return core.primitive(kind, z); };
  return (-F(y + 2.0 * h) + 8.0 * F(y + h) - 8.0 * F(y - h) + F(y - 2.0 * h)) / (12.0 * h);
}

}  // namespace

ABCSample::ABCSample(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("ABCSample: a must lie in [0,1]");
  double cap = 2.0 * std::sqrt(std::fabs(c)) * std::sqrt(a);
  if (std::fabs(b) > cap * (1.0 + 1e-12))
    throw std::invalid_argument("ABCSample: |b| exceeds 2 sqrt(|c|) sqrt(a)");
}

std::vector<double> cancellation_y_grid(const ABCSample& s, std::size_t count, double lo_frac) {
  if (!(s.a > 0.0)) throw std::invalid_argument("cancellation_y_grid: need a > 0");
  if (count < 2) throw std::invalid_argument("cancellation_y_grid: need at least 2 nodes");
  double hi = std::sqrt(s.a);
  double lo = lo_frac * hi;
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    double u = static_cast<double>(i) / static_cast<double>(count - 1);
    grid[i] = lo * std::pow(hi / lo, u);
  }
  return grid;
}

CancellationResult check_cancellation(CancellationKind kind, const ABCSample& s,
                                      const std::vector<double>& y_grid) {
  Core core{s.a, s.b, s.c};
  CancellationResult out;
  const char sign = (kind == CancellationKind::S4) ? -1 : +1;
  for (double y : y_grid) {
    if (!(y > 0.0)) throw std::invalid_argument("check_cancellation: y grid must be positive");
    double lhs = core.lhs(kind, y);
    double rhs = core.rhs_analytic(kind, y);
    out.max_residual_analytic = std::max(out.max_residual_analytic, std::fabs(lhs - rhs));
    double h = 5e-4 * std::max(y, s.a);
    double fd = static_cast<double>(sign) * fd5(core, kind, y, h);
    out.max_residual_fd = std::max(out.max_residual_fd, std::fabs(lhs - fd));
  }
  return out;
}

double p4_standalone_integral(const ABCSample& s, std::size_t nodes) {
  Core core{s.a, s.b, s.c};
  double hi = std::sqrt(s.a);
  double h = hi / static_cast<double>(nodes);
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes; ++j) {
    double y = (static_cast<double>(j) + 0.5) * h;
    sum += y * core.P4t(y);
  }
  return sum * h;
}

PositivityRatios check_positivity_bounds(const GridFunction& f) {
  return check_positivity_bounds(f, derivative(f, 1), derivative(f, 2));
}

PositivityRatios check_positivity_bounds(const GridFunction& f, const GridFunction& fx,
                                         const GridFunction& fxx) {
  if (f.min() < 0.0) throw std::invalid_argument("check_positivity_bounds: f must be >= 0");
  PositivityRatios out;
  const double sup_fxx = fxx.sup_abs();
  const double sup_fx = fx.sup_abs();
  const std::size_t n = f.size();

  for (std::size_t i = 0; i < n; ++i) {
    double rhs = 2.0 * std::sqrt(sup_fxx) * std::sqrt(f[i]);
    double lhs = std::fabs(fx[i]);
    if (rhs > 0.0)
      out.slope_bound = std::max(out.slope_bound, lhs / rhs);
    else if (lhs > 0.0)
      out.slope_bound = std::numeric_limits<double>::infinity();
  }

  // (2.7)-type bound on a y-subgrid: |f'(x-y)| <= 2 (1+||f'||_C1) max{y, sqrt f(x)}.
  const double c1 = 1.0 + sup_fx + sup_fxx;
  const std::size_t y_stride = std::max<std::size_t>(1, n / 128);
  for (std::size_t i = 0; i < n; ++i) {
    double root = std::sqrt(f[i]);
    for (std::size_t k = 1; k <= n / 2; k += y_stride) {
      double y = static_cast<double>(k) * f.dx();
      double lhs = std::fabs(fx.at_wrapped(static_cast<std::ptrdiff_t>(i) -
                                           static_cast<std::ptrdiff_t>(k)));
      double rhs = 2.0 * c1 * std::max(y, root);
      out.shifted_bound = std::max(out.shifted_bound, lhs / rhs);
    }
  }
  return out;
}

double check_form_equivalence(const GridFunction& f, double y_max) {
  if (f.min() < 0.05)
    throw std::invalid_argument(
        "check_form_equivalence: need min f >= 0.05 (the chi jump makes the comparison "
        "meaningless near contact)");
  PvEvaluator primary(HalfPlane{}, RhsForm::Primary, f, y_max);
  PvEvaluator alternate(HalfPlane{}, RhsForm::Alternate, f, y_max);
  double worst = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    worst = std::max(worst, std::fabs(primary.at(i) - alternate.at(i)));
  return worst;
}

double check_arctan_primitive(const GridFunction& f, double x, const std::vector<double>& y_grid) {
  GridFunction fx = derivative(f, 1);
  const double f0 = f.interpolate(x);
  double worst = 0.0;
  for (double y : y_grid) {
    if (y == 0.0) throw std::invalid_argument("check_arctan_primitive: y grid must avoid 0");
    for (int branch = 0; branch < 2; ++branch) {
      double sgn = branch == 0 ? 1.0 : -1.0;  // + and - branches
      auto r = [&](double z) { return f0 + sgn * f.interpolate(x - z); };
      double fraction =
          (r(y) + sgn * y * fx.interpolate(x - y)) / (y * y + r(y) * r(y));
      // h balances the stencil truncation against interpolation noise
      double h = 5e-3 * (0.5 + std::fabs(y));
      auto arct = [&](double z) { return std::atan(r(z) / z); };
      double darct = (-arct(y + 2.0 * h) + 8.0 * arct(y + h) - 8.0 * arct(y - h) +
                      arct(y - 2.0 * h)) /
                     (12.0 * h);
      worst = std::max(worst, std::fabs(fraction + darct));
    }
  }
  return worst;
}

ThetaSumTable check_theta_sum(double y, double r, double l,
                              const std::vector<std::size_t>& term_schedule) {
  ThetaSumTable table;
  table.y = y;
  table.r = r;
  table.l = l;
  const double closed = theta_kernel(y, r, l);
  for (std::size_t n : term_schedule)
    table.rows.push_back({n, std::fabs(lattice_theta(y, r, l, n) - closed)});

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (const auto& row : table.rows) {
    if (!(row.error > 0.0)) continue;
    double lx = std::log(static_cast<double>(row.terms));
    double ly = std::log(row.error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) {
    double denom = static_cast<double>(m) * sxx - sx * sx;
    if (denom != 0.0) table.tail_exponent = -(static_cast<double>(m) * sxy - sx * sy) / denom;
  }
  return table;
}

}  // namespace muskat
