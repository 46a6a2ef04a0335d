#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "muskat/identities.hpp"

namespace muskat {

/// Aggregate result of the randomized identity suite.  Thresholds follow
/// the repository acceptance gates; sweeps are reproducible from the seed.
struct IdentitySuiteResult {
  std::uint64_t seed = 0;
  std::size_t draws = 0;

  double s4_analytic = 0.0, s4_fd = 0.0;
  double pq_analytic = 0.0, pq_fd = 0.0;
  double uv_analytic = 0.0, uv_fd = 0.0;

  double arctan_constant_case = 0.0;
  double arctan_sweep = 0.0;

  double theta_canonical_error = 0.0;     // |lattice - closed| at N = 1e4, (y,r,l)=(1,1,pi)
  double theta_canonical_exponent = 0.0;  // fitted tail exponent
  double theta_exponent_min = 0.0;
  double theta_exponent_max = 0.0;
  std::size_t theta_samples = 0;

  double positivity_slope_ratio = 0.0;
  double positivity_shifted_ratio = 0.0;

  double form_equivalence = 0.0;  // max discrepancy at n = 1024

  std::vector<ThetaSumTable> tables;

  bool cancellation_ok() const {
    return s4_analytic < 1e-8 && pq_analytic < 1e-8 && uv_analytic < 1e-8 && s4_fd < 1e-5 &&
           pq_fd < 1e-5 && uv_fd < 1e-5;
  }
  bool arctan_ok() const { return arctan_constant_case < 1e-9 && arctan_sweep < 1e-6; }
  bool theta_ok() const {
    return theta_canonical_error < 1e-4 && theta_canonical_exponent >= 0.9 &&
           theta_canonical_exponent <= 1.1 && theta_exponent_min >= 0.9 &&
           theta_exponent_max <= 1.1;
  }
  bool positivity_ok() const {
    return positivity_slope_ratio <= 1.0 + 1e-6 && positivity_shifted_ratio <= 1.0 + 1e-6;
  }
  bool form_ok() const { return form_equivalence < 1e-5; }
  bool pass() const {
    return cancellation_ok() && arctan_ok() && theta_ok() && positivity_ok() && form_ok();
  }
};

IdentitySuiteResult run_identity_suite(std::uint64_t seed);

std::string identity_suite_json(const IdentitySuiteResult& result);
void write_theta_tables_csv(const IdentitySuiteResult& result, const std::string& path);

}  // namespace muskat
