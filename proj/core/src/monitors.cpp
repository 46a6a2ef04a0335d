#include "muskat/monitors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "muskat/norms.hpp"

namespace muskat {

std::vector<CheckVerdict> extrema_check(const RunReport& report, double tau, double band_factor) {
  if (tau < 0.0) tau = MonitorTolerances::extrema_tau(report.dt_used, report.dx);

  std::vector<CheckVerdict> verdicts;

  CheckVerdict sup_v;
  sup_v.check = "sup_nonincreasing";
  sup_v.tolerance = tau;
  CheckVerdict inf_v;
  inf_v.check = "inf_nondecreasing";
  inf_v.tolerance = tau;
  double worst_up = 0.0, worst_down = 0.0;
  for (std::size_t i = 1; i < report.series.size(); ++i) {
    double rise = report.series[i].sup_f - report.series[i - 1].sup_f;
    if (rise > tau) sup_v.violating_indices.push_back(i);
    worst_up = std::max(worst_up, rise);
    double drop = report.series[i - 1].inf_f - report.series[i].inf_f;
    if (drop > tau) inf_v.violating_indices.push_back(i);
    worst_down = std::max(worst_down, drop);
  }
  sup_v.worst_violation = worst_up;
  sup_v.pass = sup_v.violating_indices.empty();
  inf_v.worst_violation = worst_down;
  inf_v.pass = inf_v.violating_indices.empty();
  verdicts.push_back(sup_v);
  verdicts.push_back(inf_v);

  // Contact surrogates for lifted data (Thm-type "stays at the boundary").
  if (report.lifted && report.psi_min <= 1e-12) {
    CheckVerdict band;
    band.check = "bottom_contact_band";
    band.tolerance = band_factor;
    double lo = 0.5 * report.epsilon, hi = band_factor * report.epsilon;
    double worst = 0.0;
    for (std::size_t i = 0; i < report.series.size(); ++i) {
      double v = report.series[i].inf_f;
      double out = std::max(lo - v, v - hi);
      if (out > 0.0) band.violating_indices.push_back(i);
      worst = std::max(worst, out);
    }
    band.worst_violation = worst;
    band.pass = band.violating_indices.empty();
    verdicts.push_back(band);
  }
  if (report.lifted && is_strip(report.geometry)) {
    double l = strip_height(report.geometry);
    if (report.psi_sup >= l - 1e-12) {
      CheckVerdict band;
      band.check = "top_contact_band";
      band.tolerance = band_factor;
      double hi = l - 0.5 * report.epsilon, lo = l - band_factor * report.epsilon;
      double worst = 0.0;
      for (std::size_t i = 0; i < report.series.size(); ++i) {
        double v = report.series[i].sup_f;
        double out = std::max(lo - v, v - hi);
        if (out > 0.0) band.violating_indices.push_back(i);
        worst = std::max(worst, out);
      }
      band.worst_violation = worst;
      band.pass = band.violating_indices.empty();
      verdicts.push_back(band);
    }
  }
  return verdicts;
}

double blowup_integral_prefix(const RunReport& report, std::size_t upto_row) {
  const auto& s = report.series;
  if (s.empty()) throw std::invalid_argument("blowup_integral: empty series");
  double total = 0.0;
  std::size_t last = std::min(upto_row, s.size() - 1);
  for (std::size_t i = 1; i <= last; ++i)
    total += 0.5 * (s[i].t - s[i - 1].t) * (s[i].fx_c1g_pow4 + s[i - 1].fx_c1g_pow4);
  return total;
}

double blowup_integral(const RunReport& report) {
  return blowup_integral_prefix(report, report.series.empty() ? 0 : report.series.size() - 1);
}

double blowup_integral(const RunReport& report, double gamma_prime) {
  if (!(gamma_prime > 0.0 && gamma_prime <= 1.0))
    throw std::invalid_argument("blowup_integral: gamma_prime must lie in (0, 1]");
  if (gamma_prime == report.gamma_prime) return blowup_integral(report);
  if (report.snapshots.size() < 2)
    throw std::invalid_argument("blowup_integral: need snapshots to change gamma_prime");
  NormKind kind = NormKind::ck_gamma_holder(1, gamma_prime);
  double total = 0.0;
  double prev_t = report.snapshots.front().t;
  double prev_v = std::pow(local_norm(derivative(report.snapshots.front().f, 1), kind), 4.0);
  for (std::size_t i = 1; i < report.snapshots.size(); ++i) {
    double v = std::pow(local_norm(derivative(report.snapshots[i].f, 1), kind), 4.0);
    total += 0.5 * (report.snapshots[i].t - prev_t) * (v + prev_v);
    prev_t = report.snapshots[i].t;
    prev_v = v;
  }
  return total;
}

TpsiBound t_psi_bound(const GridFunction& psi, double gamma) {
  TpsiBound out;
  out.norm = local_norm(psi, NormKind::tilde_hk_gamma(3, gamma));
  if (out.norm < 1e-14) {
    out.infinite = true;
    out.bracket = std::numeric_limits<double>::infinity();
    return out;
  }
  double inv4 = std::pow(out.norm, -4.0);
  double logb = 1.0 + std::fabs(std::log(out.norm));
  out.bracket = std::min(inv4, logb);
  return out;
}

RateCertificate apriori_rate_check(const RunReport& report) {
  RateCertificate cert;
  const auto& s = report.series;
  if (s.size() < 2) return cert;
  double chat = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    double dt = s[i].t - s[i - 1].t;
    if (!(dt > 0.0)) continue;
    double e1 = s[i].tl2_f3 * s[i].tl2_f3;
    double e0 = s[i - 1].tl2_f3 * s[i - 1].tl2_f3;
    double lhs = (e1 - e0) / dt;
    if (lhs <= 0.0) continue;  // the estimate is one-sided
    double c = 0.5 * (s[i].c2_gamma_gamma + s[i - 1].c2_gamma_gamma);
    double sum = 0.5 * ((s[i].tl2_f1 * s[i].tl2_f1 + s[i].tl2_f2 * s[i].tl2_f2 +
                         s[i].tl2_f3 * s[i].tl2_f3) +
                        (s[i - 1].tl2_f1 * s[i - 1].tl2_f1 + s[i - 1].tl2_f2 * s[i - 1].tl2_f2 +
                         s[i - 1].tl2_f3 * s[i - 1].tl2_f3));
    double rhs = (1.0 + c * c * c * c) * sum;
    if (rhs <= 0.0) continue;
    chat = std::max(chat, lhs / rhs);
  }
  cert.fitted_constant = chat;
  // Residual of the certified inequality at the fitted constant.
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < s.size(); ++i) {
    double dt = s[i].t - s[i - 1].t;
    if (!(dt > 0.0)) continue;
    double lhs = (s[i].tl2_f3 * s[i].tl2_f3 - s[i - 1].tl2_f3 * s[i - 1].tl2_f3) / dt;
    double c = 0.5 * (s[i].c2_gamma_gamma + s[i - 1].c2_gamma_gamma);
    double sum = 0.5 * ((s[i].tl2_f1 * s[i].tl2_f1 + s[i].tl2_f2 * s[i].tl2_f2 +
                         s[i].tl2_f3 * s[i].tl2_f3) +
                        (s[i - 1].tl2_f1 * s[i - 1].tl2_f1 + s[i - 1].tl2_f2 * s[i - 1].tl2_f2 +
                         s[i - 1].tl2_f3 * s[i - 1].tl2_f3));
    worst = std::max(worst, lhs - chat * (1.0 + c * c * c * c) * sum);
  }
  cert.max_residual = std::isfinite(worst) ? worst : 0.0;
  cert.valid = true;
  return cert;
}

StabilityCertificate stability_compare(const RunReport& a, const RunReport& b, double mu) {
  if (mu < 0.0) throw std::invalid_argument("stability_compare: mu must be >= 0");
  StabilityCertificate cert;
  cert.mu = mu;
  if (a.snapshots.empty() || b.snapshots.empty())
    throw std::invalid_argument("stability_compare: missing snapshots");
  if (!a.snapshots.front().f.same_grid(b.snapshots.front().f))
    throw std::invalid_argument("stability_compare: runs use different grids");
  if (geometry_name(a.geometry) != geometry_name(b.geometry))
    throw std::invalid_argument("stability_compare: runs use different geometries");

  // Common snapshot times (both runs emit on their configured cadence).
  std::size_t ia = 0, ib = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (ia < a.snapshots.size() && ib < b.snapshots.size()) {
    double ta = a.snapshots[ia].t, tb = b.snapshots[ib].t;
    if (std::fabs(ta - tb) < 1e-10) {
      pairs.push_back({ia, ib});
      ++ia;
      ++ib;
    } else if (ta < tb) {
      ++ia;
    } else {
      ++ib;
    }
  }
  if (pairs.size() < 2) throw std::invalid_argument("stability_compare: no common snapshot times");

  NormKind kind = NormKind::tilde_l2_mu(mu);
  for (auto [ja, jb] : pairs) {
    cert.times.push_back(a.snapshots[ja].t);
    cert.differences.push_back(local_norm(a.snapshots[ja].f - b.snapshots[jb].f, kind));
  }
  cert.initial_difference = cert.differences.front();
  cert.final_difference = cert.differences.back();

  // Envelope: log D(t) <= log D(0) + K * int_0^t (1 + ||f_A||^2 + ||f_B||^2) ds,
  // with the C^{2,gamma}_gamma norms taken from the recorded series.
  auto growth_integral = [&](const RunReport& r, double t_hi) {
    double total = 0.0;
    const auto& s = r.series;
    for (std::size_t i = 1; i < s.size() && s[i].t <= t_hi + 1e-10; ++i) {
      double g1 = s[i - 1].c2_gamma_gamma, g2 = s[i].c2_gamma_gamma;
      total += 0.5 * (s[i].t - s[i - 1].t) * ((1.0 + g1 * g1) + (1.0 + g2 * g2));
    }
    return total;
  };

  double k_fit = 0.0;
  bool any = false;
  if (cert.initial_difference > 0.0) {
    for (std::size_t j = 1; j < cert.differences.size(); ++j) {
      double d = cert.differences[j];
      if (!(d > 0.0)) continue;
      // The envelope integrand is (1 + |A|^2 + |B|^2); the per-run integrals
      // each counted the constant 1, so one copy of the time span comes off.
      double t_span = cert.times[j] - cert.times.front();
      double denom = growth_integral(a, cert.times[j]) + growth_integral(b, cert.times[j]) - t_span;
      if (!(denom > 0.0)) continue;
      double k = std::log(d / cert.initial_difference) / denom;
      k_fit = any ? std::max(k_fit, k) : k;
      any = true;
    }
  }
  cert.envelope_constant = any ? k_fit : 0.0;
  cert.no_superexponential = std::isfinite(cert.envelope_constant);
  return cert;
}

}  // namespace muskat
