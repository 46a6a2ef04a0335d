#pragma once

#include <optional>
#include <string>
#include <vector>

#include "muskat/geometry.hpp"
#include "muskat/grid.hpp"
#include "muskat/kernels.hpp"
#include "muskat/mollifier.hpp"
#include "muskat/parallel.hpp"
#include "muskat/profiles.hpp"
#include "muskat/report.hpp"

namespace muskat {

/// Interface state at one instant; epsilon = 0 means the unmollified
/// (direct) equation.  With epsilon > 0 the state must keep min f >= eps/2,
/// the abort threshold of the scheme.
struct SimState {
  double t = 0.0;
  double epsilon = 0.0;
  GridFunction f;
  Geometry geometry = Plane{};
};

struct DtPolicy {
  enum class Kind { Fixed, Adaptive } kind = Kind::Adaptive;
  double value = 0.2;  // fixed step, or safety factor for adaptive
  static DtPolicy fixed(double dt) { return {Kind::Fixed, dt}; }
  static DtPolicy adaptive(double safety) { return {Kind::Adaptive, safety}; }
};

struct SolverConfig {
  Geometry geometry = Plane{};
  double half_period = 16.0;  // L
  std::size_t n = 256;
  double gamma = 0.5;  // must stay in (0, 1/2]
  double gamma_prime = 0.5;
  double t_end = 0.1;
  DtPolicy dt = DtPolicy::adaptive(0.2);
  std::vector<double> epsilons = {0.0};  // geometric schedule; first entry drives run()
  double y_max = 0.0;                    // 0 -> default L
  RhsForm form = RhsForm::Primary;
  ProfileSpec profile = ConstantProfile{0.0};
  std::string output_dir = "out";
  double cadence = 0.0;  // 0 -> t_end/50
  unsigned threads = 0;  // 0 -> default pool size

  double effective_y_max() const { return y_max > 0.0 ? y_max : half_period; }
  double effective_cadence() const { return cadence > 0.0 ? cadence : t_end / 50.0; }
  void validate() const;
};

/// Initial lift: half-plane/plane  phi_eps * psi + 2 eps; strip(l)
/// (1 - 4 eps/l) phi_eps * psi + 2 eps, which lands in [2 eps, l - 2 eps].
GridFunction lift_initial(const GridFunction& psi, double epsilon, const Geometry& geom);

/// Right-hand side of the evolution.  epsilon > 0: F = phi_eps * f, evaluate
/// the PV integral on F at every node, then apply the outer phi_eps *;
/// epsilon = 0: PV integral on f directly.
GridFunction evolution_rhs(const SimState& state, RhsForm form, double y_max,
                           const WorkerPool& pool);

struct StepOutcome {
  bool accepted = false;
  double dt_used = 0.0;
  int halvings = 0;
  std::string breach;  // empty when accepted
};

/// One classical RK4 step with geometry/min-f/norm-spike guards.  Under the
/// adaptive policy a breached step is retried with dt/2, at most eight times.
StepOutcome step(SimState& state, double dt, RhsForm form, double y_max, const WorkerPool& pool,
                 bool allow_halving);

RunReport run(const SolverConfig& config);
/// Same, with the initial interface supplied directly instead of sampled
/// from config.profile (for perturbed-pair studies).
RunReport run(const SolverConfig& config, const GridFunction& psi);

struct ContinuationReport {
  std::vector<double> epsilons;
  std::vector<bool> completed;
  std::vector<double> differences;  // d_k = TildeL2(f_{eps_k} - f_{eps_{k+1}}) at T_end
  double slope = 0.0;               // log-log slope of d_k vs eps_k
  bool partial = false;             // some member run aborted
  std::optional<GridFunction> extrapolated;  // sqrt(eps)-Richardson limit snapshot
  std::vector<RunReport> runs;
};

/// Runs the epsilon schedule, reports the Cauchy differences at T_end, their
/// fitted rate, and the Richardson limit under the assumed sqrt(eps) law
/// (the fitted slope is reported alongside, so a violated assumption shows).
ContinuationReport epsilon_continuation(const SolverConfig& config);

}  // namespace muskat
