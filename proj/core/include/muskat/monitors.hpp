#pragma once

#include <map>
#include <string>
#include <vector>

#include "muskat/grid.hpp"
#include "muskat/report.hpp"

namespace muskat {

/// Serializable verdict of one qualitative check.  The monitored
/// properties are exact for the PDE; the simulator adds O(dt^4 + dx^3)
/// error, so every check is tolerance-banded rather than exact.
struct CheckVerdict {
  std::string check;
  bool pass = false;
  double tolerance = 0.0;
  double worst_violation = 0.0;
  std::map<std::string, double> fitted_constants;
  std::vector<std::size_t> violating_indices;
};

/// Scheme-error allowance tau = c1*dt + c2*dx^3 used by the monotonicity
/// checks; the constants were calibrated once against the self-convergence
/// suite (see tests) and live here so regressions show up as drift.
struct MonitorTolerances {
  static constexpr double kExtremaDtCoeff = 5.0e-2;   // c1
  static constexpr double kExtremaDx3Coeff = 5.0e-1;  // c2
  static constexpr double kContactBandFactor = 3.0;   // K in [eps/2, K eps]
  static double extrema_tau(double dt, double dx) {
    return kExtremaDtCoeff * dt + kExtremaDx3Coeff * dx * dx * dx;
  }
};

/// Maximum principles: sup f non-increasing, inf f non-decreasing, both up
/// to tau.  For epsilon-lifted bottom-touching data additionally verifies
/// the contact surrogate inf f in [eps/2, K eps]; for strip data touching
/// the top, the mirrored band sup f in [l - K eps, l - eps/2].
std::vector<CheckVerdict> extrema_check(const RunReport& report, double tau = -1.0,
                                        double band_factor = MonitorTolerances::kContactBandFactor);

/// Trapezoid rule over the recorded blow-up integrand ||f_x||^4_{C^{1,g'}}.
/// Finite slow growth certifies no blow-up signature on [0, T].
double blowup_integral(const RunReport& report);
double blowup_integral_prefix(const RunReport& report, std::size_t upto_row);
/// Same at a different Holder exponent, recomputed from the snapshots when
/// gamma_prime is not the recorded one.
double blowup_integral(const RunReport& report, double gamma_prime);

/// Existence-time lower bound bracket min{ ||psi||^-4, 1 + |ln ||psi|| | }
/// up to the unknown constant; +inf sentinel for constant data.
struct TpsiBound {
  double norm = 0.0;
  double bracket = 0.0;
  bool infinite = false;
};
TpsiBound t_psi_bound(const GridFunction& psi, double gamma);

/// Fits the single constant C in the a priori rate
///   d/dt ||f'''||^2 <= C (1 + ||f||^4_{C^{2,g}_g}) (||f'||^2+||f''||^2+||f'''||^2)
/// over the whole run and reports it with the residual at the fit.
struct RateCertificate {
  double fitted_constant = 0.0;
  double max_residual = 0.0;
  bool valid = false;
};
RateCertificate apriori_rate_check(const RunReport& report);

/// Two-run stability: D(t) = TildeL2Mu(f_A - f_B, mu) against the
/// exponential envelope with one fitted constant K.
struct StabilityCertificate {
  double mu = 0.0;
  double envelope_constant = 0.0;  // K
  double initial_difference = 0.0;
  double final_difference = 0.0;
  bool no_superexponential = false;
  std::vector<double> times;
  std::vector<double> differences;
};
StabilityCertificate stability_compare(const RunReport& a, const RunReport& b, double mu);

}  // namespace muskat
