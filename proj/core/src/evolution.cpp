#include "muskat/evolution.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "muskat/norms.hpp"

namespace muskat {

namespace {

std::string guard_breach(const Geometry& geom, double epsilon, const GridFunction& f_new,
                         const GridFunction& f_old) {
  if (!f_new.all_finite()) return "nan";
  if (auto violation = range_violation(geom, f_new)) return "range_breach: " + *violation;
  if (epsilon > 0.0 && f_new.min() < 0.5 * epsilon) return "min_f_breach";
  // Norm-spike guard: one step should never move the interface by a large
  // fraction of its own scale.
  double spike_cap = 0.5 * std::max(1.0, f_old.sup_abs());
  double move = 0.0;
  for (std::size_t i = 0; i < f_new.size(); ++i)
    move = std::max(move, std::fabs(f_new[i] - f_old[i]));
  if (move > spike_cap) return "norm_spike";
  return {};
}

}  // namespace

void SolverConfig::validate() const {
  if (!(gamma > 0.0 && gamma <= 0.5))
    throw std::invalid_argument("config: gamma must lie in (0, 1/2]");
  if (!(gamma_prime > 0.0 && gamma_prime <= 1.0))
    throw std::invalid_argument("config: gamma_prime must lie in (0, 1]");
  if (!(t_end > 0.0)) throw std::invalid_argument("config: t_end must be positive");
  if (!(dt.value > 0.0)) throw std::invalid_argument("config: dt must be positive");
  if (n < 16) throw std::invalid_argument("config: need n >= 16");
  if (!(half_period > 0.0)) throw std::invalid_argument("config: L must be positive");
  const double dx = 2.0 * half_period / static_cast<double>(n);
  for (double e : epsilons) {
    if (e == 0.0) continue;
    if (!(e > 0.0 && e <= 0.5))
      throw std::invalid_argument("config: epsilon values must lie in (0, 1/2] or be 0");
    if (e < 2.0 * dx)
      throw std::invalid_argument("config: epsilon < 2*dx is unresolved by the grid");
  }
  if (effective_y_max() > half_period * (1.0 + 1e-12))
    throw std::invalid_argument("config: y_max must not exceed L");
  if (form == RhsForm::Alternate && !is_half_plane(geometry))
    throw std::invalid_argument("config: alternate form requires the half-plane");
  if (is_strip(geometry) && !(strip_height(geometry) > 0.0))
    throw std::invalid_argument("config: strip height must be positive");
}

GridFunction lift_initial(const GridFunction& psi, double epsilon, const Geometry& geom) {
  if (auto violation = range_violation(geom, psi))
    throw std::invalid_argument("lift_initial: " + *violation);
  if (!(epsilon > 0.0)) throw std::invalid_argument("lift_initial: epsilon must be positive");
  Mollifier m = Mollifier::build(epsilon);
  GridFunction smoothed = mollify(psi, m);
  GridFunction lifted = smoothed;
  if (is_strip(geom)) {
    const double l = strip_height(geom);
    lifted = (1.0 - 4.0 * epsilon / l) * smoothed + 2.0 * epsilon;
  } else {
    lifted = smoothed + 2.0 * epsilon;
  }
  if (auto violation = range_violation(geom, lifted))
    throw std::invalid_argument("lift_initial: lifted state out of range: " + *violation);
  return lifted;
}

GridFunction evolution_rhs(const SimState& state, RhsForm form, double y_max,
                           const WorkerPool& pool) {
  if (state.epsilon == 0.0) {
    auto values = pv_integral_all(state.geometry, form, state.f, y_max, pool);
    return GridFunction(state.f.half_period(), std::move(values));
  }
  Mollifier m = Mollifier::build(state.epsilon);
  GridFunction smoothed = mollify(state.f, m);
  auto values = pv_integral_all(state.geometry, form, smoothed, y_max, pool);
  GridFunction inner(state.f.half_period(), std::move(values));
  return mollify(inner, m);
}

StepOutcome step(SimState& state, double dt, RhsForm form, double y_max, const WorkerPool& pool,
                 bool allow_halving) {
  StepOutcome outcome;
  double dt_try = dt;
  const int max_halvings = 8;
  for (int attempt = 0;; ++attempt) {
    std::string breach;
    try {
      GridFunction k1 = evolution_rhs(state, form, y_max, pool);
      SimState s = state;
      s.f = state.f + (0.5 * dt_try) * k1;
      s.t = state.t + 0.5 * dt_try;
      GridFunction k2 = evolution_rhs(s, form, y_max, pool);
      s.f = state.f + (0.5 * dt_try) * k2;
      GridFunction k3 = evolution_rhs(s, form, y_max, pool);
      s.f = state.f + dt_try * k3;
      s.t = state.t + dt_try;
      GridFunction k4 = evolution_rhs(s, form, y_max, pool);
      GridFunction f_new =
          state.f + (dt_try / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      breach = guard_breach(state.geometry, state.epsilon, f_new, state.f);
      if (breach.empty()) {
        state.f = f_new;
        state.t += dt_try;
        outcome.accepted = true;
        outcome.dt_used = dt_try;
        outcome.halvings = attempt;
        return outcome;
      }
    } catch (const std::exception& e) {
      breach = std::string("stage failure: ") + e.what();
    }
    if (!allow_halving || attempt >= max_halvings) {
      outcome.accepted = false;
      outcome.dt_used = dt_try;
      outcome.halvings = attempt;
      outcome.breach = breach;
      return outcome;
    }
    dt_try *= 0.5;
  }
}

namespace {

SeriesRow make_row(const SimState& state, const SolverConfig& config, const WorkerPool& pool) {
  SeriesRow row;
  row.t = state.t;
  row.sup_f = state.f.max();
  row.inf_f = state.f.min();
  GridFunction ft = evolution_rhs(state, config.form, config.effective_y_max(), pool);
  row.rhs_sup = ft.sup_abs();
  row.tilde_h3_gamma = local_norm(state.f, NormKind::tilde_hk_gamma(3, config.gamma));
  row.c2_gamma_gamma = local_norm(state.f, NormKind::ck_gamma_gamma(2, config.gamma));
  GridFunction fx = derivative(state.f, 1);
  row.fx_c1g = local_norm(fx, NormKind::ck_gamma_holder(1, config.gamma_prime));
  row.fx_c1g_pow4 = row.fx_c1g * row.fx_c1g * row.fx_c1g * row.fx_c1g;
  row.tl2_f1 = windowed_l2_sup(fx);
  row.tl2_f2 = windowed_l2_sup(derivative(state.f, 2));
  row.tl2_f3 = windowed_l2_sup(derivative(state.f, 3));
  return row;
}

}  // namespace

RunReport run(const SolverConfig& config) {
  return run(config,
             sample_profile(config.profile, config.geometry, config.half_period, config.n));
}

RunReport run(const SolverConfig& config, const GridFunction& psi) {
  config.validate();
  if (psi.size() != config.n || psi.half_period() != config.half_period)
    throw std::invalid_argument("run: initial data does not match the configured grid");
  if (auto violation = range_violation(config.geometry, psi))
    throw std::invalid_argument("run: " + *violation);
  const auto t0 = std::chrono::steady_clock::now();
  WorkerPool pool(config.threads);

  const double epsilon = config.epsilons.empty() ? 0.0 : config.epsilons.front();

  RunReport report;
  report.geometry = config.geometry;
  report.gamma = config.gamma;
  report.gamma_prime = config.gamma_prime;
  report.epsilon = epsilon;
  report.dx = psi.dx();
  report.psi_min = psi.min();
  report.psi_sup = psi.max();
  report.lifted = epsilon > 0.0;

  SimState state{0.0, epsilon, psi, config.geometry};
  if (epsilon > 0.0) state.f = lift_initial(psi, epsilon, config.geometry);

  const double y_max = config.effective_y_max();
  const double cadence = config.effective_cadence();
  const bool adaptive = config.dt.kind == DtPolicy::Kind::Adaptive;

  report.series.push_back(make_row(state, config, pool));
  report.snapshots.push_back({state.t, state.f});
  double next_output = std::min(cadence, config.t_end);

  while (state.t < config.t_end * (1.0 - 1e-12)) {
    double dt;
    if (adaptive) {
      double slope = derivative(state.f, 1).sup_abs();
      dt = config.dt.value * state.f.dx() / (1.0 + slope);
    } else {
      dt = config.dt.value;
    }
    dt = std::min(dt, next_output - state.t);
    StepOutcome outcome = step(state, dt, config.form, y_max, pool, adaptive);
    if (!outcome.accepted) {
      report.abort = AbortRecord{outcome.breach.find("nan") != std::string::npos
                                     ? "nan"
                                     : (outcome.halvings >= 8 ? "dt_collapse" : "range_breach"),
                                 state.t, outcome.breach};
      break;
    }
    report.dt_used = outcome.dt_used;
    if (state.t >= next_output * (1.0 - 1e-12)) {
      report.series.push_back(make_row(state, config, pool));
      report.snapshots.push_back({state.t, state.f});
      next_output = std::min(next_output + cadence, config.t_end);
    }
  }

  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

ContinuationReport epsilon_continuation(const SolverConfig& config) {
  config.validate();
  if (config.epsilons.size() < 2)
    throw std::invalid_argument("continuation: need at least two epsilon values");
  for (double e : config.epsilons)
    if (!(e > 0.0)) throw std::invalid_argument("continuation: epsilons must be positive");

  ContinuationReport cr;
  cr.epsilons = config.epsilons;
  for (double eps : config.epsilons) {
    SolverConfig member = config;
    member.epsilons = {eps};
    RunReport r = run(member);
    cr.completed.push_back(r.completed());
    if (!r.completed()) cr.partial = true;
    cr.runs.push_back(std::move(r));
  }

  for (std::size_t k = 0; k + 1 < cr.runs.size(); ++k) {
    if (!cr.completed[k] || !cr.completed[k + 1]) {
      cr.differences.push_back(std::nan(""));
      continue;
    }
    const GridFunction& a = cr.runs[k].snapshots.back().f;
    const GridFunction& b = cr.runs[k + 1].snapshots.back().f;
    cr.differences.push_back(windowed_l2_sup(a - b));
  }

  // log-log fit of d_k against eps_k over the valid pairs
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t k = 0; k < cr.differences.size(); ++k) {
    double d = cr.differences[k];
    if (!std::isfinite(d) || d <= 0.0) continue;
    double lx = std::log(cr.epsilons[k]);
    double ly = std::log(d);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) {
    double denom = static_cast<double>(m) * sxx - sx * sx;
    cr.slope = denom != 0.0 ? (static_cast<double>(m) * sxy - sx * sy) / denom : 0.0;
  }

  // Richardson limit under the sqrt(eps) rate, from the finest two runs.
  if (cr.runs.size() >= 2 && cr.completed[cr.runs.size() - 1] && cr.completed[cr.runs.size() - 2]) {
    const GridFunction& coarse = cr.runs[cr.runs.size() - 2].snapshots.back().f;
    const GridFunction& fine = cr.runs[cr.runs.size() - 1].snapshots.back().f;
    double r_coarse = std::sqrt(cr.epsilons[cr.runs.size() - 2]);
    double r_fine = std::sqrt(cr.epsilons[cr.runs.size() - 1]);
    if (r_coarse > r_fine) {
      double w = r_fine / (r_coarse - r_fine);
      cr.extrapolated = fine + w * (fine - coarse);
    } else {
      cr.extrapolated = fine;  // repeated epsilon: states already coincide
    }
  }
  return cr;
}

}  // namespace muskat
