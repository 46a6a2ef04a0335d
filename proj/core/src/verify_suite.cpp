#include "muskat/verify_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "muskat/profiles.hpp"
#include "muskat/rng.hpp"

namespace muskat {

namespace {

constexpr double kPi = std::numbers::pi;

ABCSample draw_sample(Rng& rng) {
  double u = rng.uniform(0.1, 1.0);
  double a = u * u;  // probes down to a = 0.01
  double c = rng.uniform(-3.0, 3.0);
  double cap = 2.0 * std::sqrt(std::fabs(c)) * std::sqrt(a);
  double b = rng.uniform(-1.0, 1.0) * cap;
  return ABCSample(a, b, c);
}

// Random trigonometric polynomial with a handful of harmonics on [-pi, pi).
struct TrigPoly {
  std::vector<double> ac, as;
  double eval(double x) const {
    double v = 0.0;
    for (std::size_t j = 0; j < ac.size(); ++j) {
      double k = static_cast<double>(j + 1);
      v += ac[j] * std::cos(k * x) + as[j] * std::sin(k * x);
    }
    return v;
  }
  double deriv(double x) const {
    double v = 0.0;
    for (std::size_t j = 0; j < ac.size(); ++j) {
      double k = static_cast<double>(j + 1);
      v += -k * ac[j] * std::sin(k * x) + k * as[j] * std::cos(k * x);
    }
    return v;
  }
  double deriv2(double x) const {
    double v = 0.0;
    for (std::size_t j = 0; j < ac.size(); ++j) {
      double k = static_cast<double>(j + 1);
      v += -k * k * (ac[j] * std::cos(k * x) + as[j] * std::sin(k * x));
    }
    return v;
  }
};

TrigPoly draw_trig(Rng& rng, std::size_t harmonics, double scale) {
  TrigPoly p;
  for (std::size_t j = 0; j < harmonics; ++j) {
    p.ac.push_back(scale * rng.uniform(-1.0, 1.0) / static_cast<double>(j + 1));
    p.as.push_back(scale * rng.uniform(-1.0, 1.0) / static_cast<double>(j + 1));
  }
  return p;
}

}  // namespace

IdentitySuiteResult run_identity_suite(std::uint64_t seed) {
  IdentitySuiteResult out;
  out.seed = seed;
  out.draws = 1000;
  Rng rng(seed);

  // Cancellation identities over randomized admissible (a, b, c) draws.
  for (std::size_t d = 0; d < out.draws; ++d) {
    ABCSample s = draw_sample(rng);
    auto grid = cancellation_y_grid(s, 64);
    auto r1 = check_cancellation(CancellationKind::S4, s, grid);
    auto r2 = check_cancellation(CancellationKind::PQ, s, grid);
    auto r3 = check_cancellation(CancellationKind::UV, s, grid);
    out.s4_analytic = std::max(out.s4_analytic, r1.max_residual_analytic);
    out.s4_fd = std::max(out.s4_fd, r1.max_residual_fd);
    out.pq_analytic = std::max(out.pq_analytic, r2.max_residual_analytic);
    out.pq_fd = std::max(out.pq_fd, r2.max_residual_fd);
    out.uv_analytic = std::max(out.uv_analytic, r3.max_residual_analytic);
    out.uv_fd = std::max(out.uv_fd, r3.max_residual_fd);
  }

  // Arctan primitive: closed-form constant case, then a randomized sweep.
  {
    GridFunction fc = GridFunction::constant(8.0, 512, 1.0);
    std::vector<double> ys;
    for (int i = 0; i < 16; ++i) ys.push_back(0.5 + 0.2 * i);
    out.arctan_constant_case = check_arctan_primitive(fc, 0.3, ys);

    for (int trial = 0; trial < 100; ++trial) {
      TrigPoly p = draw_trig(rng, 3, 0.3);
      std::vector<double> samples(2048);
      for (std::size_t i = 0; i < samples.size(); ++i) {
        double x = -8.0 + 16.0 * static_cast<double>(i) / 2048.0;
        samples[i] = 2.0 + p.eval(kPi * x / 8.0);
      }
      GridFunction f(8.0, std::move(samples));
      double x = rng.uniform(-4.0, 4.0);
      std::vector<double> yg;
      for (int i = 0; i < 8; ++i) yg.push_back(0.3 + 0.35 * i + 0.1 * rng.uniform01());
      out.arctan_sweep = std::max(out.arctan_sweep, check_arctan_primitive(f, x, yg));
    }
  }

  // Theta lattice identity: canonical point plus randomized admissible samples.
  {
    std::vector<std::size_t> schedule = {500, 1000, 2000, 4000, 8000, 10000};
    ThetaSumTable canon = check_theta_sum(1.0, 1.0, kPi, schedule);
    out.theta_canonical_error = canon.rows.back().error;
    out.theta_canonical_exponent = canon.tail_exponent;
    out.tables.push_back(canon);

    out.theta_exponent_min = 1e300;
    out.theta_exponent_max = -1e300;
    out.theta_samples = 100;
    for (std::size_t t = 0; t < out.theta_samples; ++t) {
      double l = rng.uniform(0.5, 4.0);
      double y = rng.uniform(0.05, 3.0);
      double r = rng.uniform(0.05, 0.95) * l;
      ThetaSumTable tab = check_theta_sum(y, r, l, schedule);
      out.theta_exponent_min = std::min(out.theta_exponent_min, tab.tail_exponent);
      out.theta_exponent_max = std::max(out.theta_exponent_max, tab.tail_exponent);
      if (t < 4) out.tables.push_back(tab);
    }
  }

  // Positivity bounds on non-negative profiles with analytic derivatives.
  {
    const std::size_t n = 1024;
    // parabola-like touchdown 1 - cos x on the 2 pi torus
    {
      std::vector<double> f(n), fx(n), fxx(n);
      for (std::size_t i = 0; i < n; ++i) {
        double x = -kPi + 2.0 * kPi * static_cast<double>(i) / n;
        f[i] = 1.0 - std::cos(x);
        fx[i] = std::sin(x);
        fxx[i] = std::cos(x);
      }
      auto ratios = check_positivity_bounds(GridFunction(kPi, f), GridFunction(kPi, fx),
                                            GridFunction(kPi, fxx));
      out.positivity_slope_ratio = std::max(out.positivity_slope_ratio, ratios.slope_bound);
      out.positivity_shifted_ratio = std::max(out.positivity_shifted_ratio, ratios.shifted_bound);
    }
    for (int trial = 0; trial < 50; ++trial) {
      TrigPoly p = draw_trig(rng, 4, 1.0);
      std::vector<double> f(n), fx(n), fxx(n);
      for (std::size_t i = 0; i < n; ++i) {
        double x = -kPi + 2.0 * kPi * static_cast<double>(i) / n;
        double g = p.eval(x), g1 = p.deriv(x), g2 = p.deriv2(x);
        f[i] = g * g;
        fx[i] = 2.0 * g * g1;
        fxx[i] = 2.0 * (g1 * g1 + g * g2);
      }
      auto ratios = check_positivity_bounds(GridFunction(kPi, f), GridFunction(kPi, fx),
                                            GridFunction(kPi, fxx));
      out.positivity_slope_ratio = std::max(out.positivity_slope_ratio, ratios.slope_bound);
      out.positivity_shifted_ratio = std::max(out.positivity_shifted_ratio, ratios.shifted_bound);
    }
  }

  // Two-form equivalence on a strictly positive bump at reference resolution.
  {
    BumpProfile bump{1.0, 2.0, 0.0, 0.5};
    GridFunction f = sample_profile(bump, HalfPlane{}, 12.8, 1024);
    out.form_equivalence = check_form_equivalence(f, 12.8);
  }

  return out;
}

std::string identity_suite_json(const IdentitySuiteResult& r) {
  nlohmann::json j;
  j["seed"] = r.seed;
  j["draws"] = r.draws;
  j["cancellation"] = {
      {"S4", {{"analytic", r.s4_analytic}, {"fd", r.s4_fd}}},
      {"PQ", {{"analytic", r.pq_analytic}, {"fd", r.pq_fd}}},
      {"UV", {{"analytic", r.uv_analytic}, {"fd", r.uv_fd}}},
      {"pass", r.cancellation_ok()}};
  j["arctan_primitive"] = {{"constant_case", r.arctan_constant_case},
                           {"sweep", r.arctan_sweep},
                           {"pass", r.arctan_ok()}};
  j["theta_lattice"] = {{"canonical_error_at_1e4", r.theta_canonical_error},
                        {"canonical_tail_exponent", r.theta_canonical_exponent},
                        {"sample_exponent_min", r.theta_exponent_min},
                        {"sample_exponent_max", r.theta_exponent_max},
                        {"samples", r.theta_samples},
                        {"pass", r.theta_ok()}};
  j["positivity"] = {{"slope_ratio", r.positivity_slope_ratio},
                     {"shifted_ratio", r.positivity_shifted_ratio},
                     {"pass", r.positivity_ok()}};
  j["form_equivalence"] = {{"max_discrepancy_n1024", r.form_equivalence}, {"pass", r.form_ok()}};
  j["pass"] = r.pass();
  return j.dump(2);
}

void write_theta_tables_csv(const IdentitySuiteResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "y,r,l,N,error\n";
  char buf[256];
  for (const auto& tab : result.tables) {
    for (const auto& row : tab.rows) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%zu,%.17g\n", tab.y, tab.r, tab.l,
                    row.terms, row.error);
      out << buf;
    }
  }
}

}  // namespace muskat
