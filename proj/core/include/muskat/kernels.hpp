#pragma once

#include <cstddef>
#include <vector>

#include "muskat/geometry.hpp"
#include "muskat/grid.hpp"
#include "muskat/parallel.hpp"

namespace muskat {

/// Right-hand-side form.  Primary is the difference/sum kernel equation;
/// Alternate is the half-plane rewriting with the pi * chi_{f>0} jump and
/// is valid only there.
enum class RhsForm { Primary, Alternate };

/// Strip kernel Theta_l(y, r) = (pi/2l) sinh(pi y/l) / (cosh(pi y/l) - cos(pi r/l)).
/// For |pi y/l| > 30 an exponential expansion avoids cosh overflow.
/// The removable-singularity lattice points (y, r) = (0, 2 l k) are rejected.
double theta_kernel(double y, double r, double l);

/// Truncated symmetric image sum  sum_{|n|<=N} y / (y^2 + (r - 2 l n)^2),
/// which converges to theta_kernel with O(y/(l^2 N)) tail.
double lattice_theta(double y, double r, double l, std::size_t terms);

/// Midpoint y-nodes (j+1/2)*dx for j = 0..count-1, paired +-y; nodes never
/// hit y = 0 and the covered radius stays within the half period.
struct QuadratureSpec {
  std::size_t count = 0;
  double dx = 0.0;
  double node(std::size_t j) const { return (static_cast<double>(j) + 0.5) * dx; }
  double y_max() const { return static_cast<double>(count) * dx; }
  static QuadratureSpec up_to(double y_max, double dx, double half_period);
};

/// Principal-value evaluator for one interface snapshot: precomputes f' and
/// half-offset tables of f, f' so the inner loop reads arrays only (the
/// quadrature nodes fall exactly halfway between grid points).
class PvEvaluator {
public:
  PvEvaluator(const Geometry& geom, RhsForm form, const GridFunction& f, double y_max);

  std::size_t nodes() const { return f_->size(); }
  const QuadratureSpec& quadrature() const { return quad_; }

  /// integrand(x_i, +y_j) + integrand(x_i, -y_j): the symmetric pairing under
  /// which the PV integrand stays bounded.
  double paired_integrand(std::size_t i, std::size_t j) const;

  /// Midpoint-rule PV integral at node i; the Alternate form adds the
  /// pi * chi_{(0,infty)}(f(x_i)) jump and its analytic arctan tail closure.
  double at(std::size_t i) const;

  std::vector<double> all(const WorkerPool& pool) const;

private:
  Geometry geom_;
  RhsForm form_;
  const GridFunction* f_;
  QuadratureSpec quad_;
  std::vector<double> fx_;       // f' at grid nodes
  std::vector<double> f_half_;   // f at half offsets
  std::vector<double> fx_half_;  // f' at half offsets
  double strip_l_ = 0.0;

  double fh(std::ptrdiff_t k) const;
  double gh(std::ptrdiff_t k) const;
};

/// One-call forms used by the solver and tests.
double pv_integral(const Geometry& geom, RhsForm form, const GridFunction& f, std::size_t node,
                   double y_max);
std::vector<double> pv_integral_all(const Geometry& geom, RhsForm form, const GridFunction& f,
                                    double y_max, const WorkerPool& pool);

/// Generic paired integrand at an arbitrary offset y (4-point periodic
/// interpolation reads); diagnostic-grade, not the hot path.
double paired_integrand_generic(const Geometry& geom, RhsForm form, const GridFunction& f,
                                const GridFunction& fx, double x, double y);

/// Interface velocity (u1, u2) at every node on the half-plane, from the
/// mirrored Biot-Savart kernels; diagnostic only.
struct InterfaceVelocity {
  std::vector<double> u1;
  std::vector<double> u2;
};
InterfaceVelocity velocity_on_interface(const GridFunction& f, double y_max,
                                        const WorkerPool& pool);

/// Tangential multiple added when recasting the curve motion in graph form;
/// used to cross-check f_t = u2 + f_x * tangential_multiple.
double tangential_multiple(const GridFunction& f, std::size_t node, double y_max);

}  // namespace muskat
