#pragma once

#include <vector>

#include "muskat/grid.hpp"

namespace muskat {

/// Smooth even bump phi(x) = exp(beta x^2/(x^2-1)) on (-1,1), zero outside,
/// scaled to phi_eps(x) = phi(x/eps)/eps.  beta is solved by bisection so
/// the unit profile has unit mass; phi(0) = 1 and phi decreases on [0,1]
/// hold by construction.  The sup of |phi'| is measured, not assumed.
class Mollifier {
public:
  static Mollifier build(double epsilon);

  double epsilon() const { return epsilon_; }
  double beta() const { return beta_; }
  /// Unit-profile mass recomputed after the beta solve; should be 1 to 1e-12.
  double mass_check() const { return mass_check_; }
  double phi_prime_sup() const { return phi_prime_sup_; }
  bool phi_prime_within_two() const { return phi_prime_sup_ <= 2.0; }

  /// Unit-scale profile phi(u); zero for |u| >= 1.
  double unit_profile(double u) const;
  /// phi_eps(x) = phi(x/eps)/eps.
  double operator()(double x) const;

  /// Samples of phi_eps on [-eps, eps] (inclusive), uniformly spaced.
  const std::vector<double>& sample_table() const { return table_; }

private:
  Mollifier() = default;
  double epsilon_ = 0.0;
  double beta_ = 0.0;
  double mass_check_ = 0.0;
  double phi_prime_sup_ = 0.0;
  std::vector<double> table_;
};

/// Periodic convolution phi_eps * g by composite quadrature on grid-aligned
/// nodes over the mollifier support.  Weights are non-negative and normalized
/// to unit sum, so constants, the periodic mean, and the minimum are all
/// preserved.  Requires eps >= 2*dx.
GridFunction mollify(const GridFunction& g, const Mollifier& m);

}  // namespace muskat
