#pragma once

#include <cstddef>
#include <vector>

#include "muskat/grid.hpp"

namespace muskat {

/// Near-contact Taylor data (a, b, c) = (f(0), f'(0), f''(0)) with the
/// admissibility constraint |b| <= 2 sqrt(|c|) sqrt(a) enforced at
/// construction (|c| is the available stand-in for ||f''||_inf, which can
/// only tighten the constraint).
struct ABCSample {
  double a;
  double b;
  double c;
  ABCSample(double a_, double b_, double c_);
};

/// Log-spaced y-grid over (lo_frac * sqrt(a), sqrt(a)], probing the
/// near-singular region the cancellation identities live on.
std::vector<double> cancellation_y_grid(const ABCSample& s, std::size_t count,
                                        double lo_frac = 1e-3);

enum class CancellationKind { S4, PQ, UV };

struct CancellationResult {
  double max_residual_analytic = 0.0;
  double max_residual_fd = 0.0;
};

/// Both sides of the leading-term cancellation identities: the explicit
/// S4~/P4~/Q4~/U4~/V4~ combinations against the y-derivatives of their
/// primitives, the latter evaluated analytically and by 5-point finite
/// differences (two independent routes over the hand transcription).
CancellationResult check_cancellation(CancellationKind kind, const ABCSample& s,
                                      const std::vector<double>& y_grid);

/// Demonstration of the divergence of the standalone term int y P4~ dy,
/// which scales like a^(-1/2); returns the integral for the given sample.
double p4_standalone_integral(const ABCSample& s, std::size_t nodes);

struct PositivityRatios {
  double slope_bound = 0.0;    // max over x of |f'| / (2 sqrt(||f''||) sqrt(f))
  double shifted_bound = 0.0;  // max over (x,y>0) of |f'(x-y)| / (2 (1+||f'||_C1) max{y, sqrt f(x)})
};

/// Pointwise inequality sweep on a non-negative interface; pass when both
/// ratios stay <= 1 + 1e-6.  Derivatives may be supplied analytically;
/// when absent they come from the 4th-order grid stencils.
PositivityRatios check_positivity_bounds(const GridFunction& f);
PositivityRatios check_positivity_bounds(const GridFunction& f, const GridFunction& fx,
                                         const GridFunction& fxx);

/// Max pointwise discrepancy between the Primary and Alternate right-hand
/// sides on a strictly positive half-plane interface (min f >= 0.05).
double check_form_equivalence(const GridFunction& f, double y_max);

/// Residual of  (f(x) +- f(x-y) +- y f'(x-y)) / (y^2 + (f(x) +- f(x-y))^2)
///            + d/dy arctan( (f(x) +- f(x-y)) / y )  = 0
/// with the derivative taken by 5-point finite differences; both branches.
double check_arctan_primitive(const GridFunction& f, double x, const std::vector<double>& y_grid);

struct ThetaSumRow {
  std::size_t terms;
  double error;  // |lattice_theta - theta_kernel|
};
struct ThetaSumTable {
  double y, r, l;
  std::vector<ThetaSumRow> rows;
  double tail_exponent = 0.0;  // fitted slope of log error vs log N
};

/// Convergence of the truncated lattice sum to the closed form, with the
/// fitted O(1/N) tail exponent.
ThetaSumTable check_theta_sum(double y, double r, double l,
                              const std::vector<std::size_t>& term_schedule);

}  // namespace muskat
