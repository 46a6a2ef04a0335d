#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muskat/geometry.hpp"
#include "muskat/grid.hpp"

namespace muskat {

/// One record of the monitored time series.
struct SeriesRow {
  double t = 0.0;
  double sup_f = 0.0;
  double inf_f = 0.0;
  double rhs_sup = 0.0;          // ||f_t||_inf
  double tilde_h3_gamma = 0.0;   // tilde-H^3_gamma norm of f
  double c2_gamma_gamma = 0.0;   // C^{2,gamma}_gamma seminorm of f
  double fx_c1g = 0.0;           // ||f_x||_{C^{1,gamma'}}
  double fx_c1g_pow4 = 0.0;      // blow-up integrand ||f_x||^4_{C^{1,gamma'}}
  double tl2_f1 = 0.0;           // tilde-L2 of f'
  double tl2_f2 = 0.0;           // tilde-L2 of f''
  double tl2_f3 = 0.0;           // tilde-L2 of f'''
};

struct AbortRecord {
  std::string reason;  // "range_breach" | "dt_collapse" | "nan"
  double t = 0.0;
  std::string detail;
};

struct Snapshot {
  double t = 0.0;
  GridFunction f;
};

/// Time series of norms, extrema, RHS sup-norms, blow-up integrand and
/// snapshots for one run, plus enough context for the qualitative monitors.
struct RunReport {
  Geometry geometry = Plane{};
  double gamma = 0.5;
  double gamma_prime = 0.5;
  double epsilon = 0.0;
  double dt_used = 0.0;  // last accepted dt
  double dx = 0.0;
  double psi_min = 0.0;  // pre-lift profile extrema
  double psi_sup = 0.0;
  bool lifted = false;
  std::vector<SeriesRow> series;
  std::vector<Snapshot> snapshots;
  std::optional<AbortRecord> abort;
  double wall_seconds = 0.0;

  bool completed() const { return !abort.has_value(); }
};

void write_series_csv(const RunReport& report, const std::string& path);
std::vector<SeriesRow> read_series_csv(const std::string& path);

/// File name used for a snapshot at time t (snap_<t>.csv).
std::string snapshot_filename(double t);

}  // namespace muskat
