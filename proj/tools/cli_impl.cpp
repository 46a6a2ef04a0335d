#include "cli_impl.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "muskat/config.hpp"
#include "muskat/monitors.hpp"
#include "muskat/norms.hpp"
#include "muskat/verify_suite.hpp"

namespace muskat::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240501ull;

json verdict_to_json(const CheckVerdict& v) {
  json j;
  j["check"] = v.check;
  j["pass"] = v.pass;
  j["tolerance"] = v.tolerance;
  j["worst_violation"] = v.worst_violation;
  j["fitted_constants"] = v.fitted_constants;
  return j;
}

void emit_run_outputs(const SolverConfig& cfg, const RunReport& report, const fs::path& dir) {
  fs::create_directories(dir);
  write_series_csv(report, (dir / "series.csv").string());
  for (const auto& snap : report.snapshots)
    write_csv(snap.f, (dir / snapshot_filename(snap.t)).string());
  write_text_file((dir / "manifest.json").string(), manifest_json(cfg, report, kDefaultSeed));
}

int run_simulate(const std::string& config_path, const std::string& output_override) {
  SolverConfig cfg = parse_config_file(config_path);
  if (!output_override.empty()) cfg.output_dir = output_override;

  // advisory horizon scale from the initial data (up to an unknown constant)
  GridFunction psi = sample_profile(cfg.profile, cfg.geometry, cfg.half_period, cfg.n);
  TpsiBound horizon = t_psi_bound(psi, cfg.gamma);
  if (!horizon.infinite && cfg.t_end > 10.0 * horizon.bracket)
    std::cerr << "note: t_end = " << cfg.t_end << " is large against the data-size bracket "
              << horizon.bracket << " (|psi| = " << horizon.norm << ")\n";

  RunReport report = run(cfg, psi);
  fs::path dir(cfg.output_dir);
  emit_run_outputs(cfg, report, dir);

  auto verdicts = extrema_check(report);
  json out = json::array();
  bool all_pass = report.completed();
  for (const auto& v : verdicts) {
    out.push_back(verdict_to_json(v));
    all_pass = all_pass && v.pass;
  }
  {
    CheckVerdict blowup;
    blowup.check = "blowup_integral_finite";
    double value = blowup_integral(report);
    blowup.pass = std::isfinite(value);
    blowup.worst_violation = 0.0;
    blowup.fitted_constants["integral"] = value;
    out.push_back(verdict_to_json(blowup));
    all_pass = all_pass && blowup.pass;
  }
  {
    RateCertificate rate = apriori_rate_check(report);
    CheckVerdict v;
    v.check = "apriori_rate";
    v.pass = rate.valid && std::isfinite(rate.fitted_constant);
    v.fitted_constants["C_hat"] = rate.fitted_constant;
    v.fitted_constants["max_residual"] = rate.max_residual;
    if (!horizon.infinite) v.fitted_constants["t_psi_bracket"] = horizon.bracket;
    out.push_back(verdict_to_json(v));
    all_pass = all_pass && v.pass;
  }
  write_text_file((dir / "verdicts.json").string(), out.dump(2));

  if (report.abort)
    std::cerr << "run aborted at t=" << report.abort->t << " (" << report.abort->reason << ": "
              << report.abort->detail << ")\n";
  std::cout << "simulate: " << (all_pass ? "all checks passed" : "CHECK FAILURES") << ", outputs in "
            << dir.string() << "\n";
  return all_pass ? 0 : 1;
}

int run_verify(std::uint64_t seed, const std::string& out_path, const std::string& tables_dir) {
  IdentitySuiteResult result = run_identity_suite(seed);
  write_text_file(out_path, identity_suite_json(result));
  if (!tables_dir.empty()) {
    fs::create_directories(tables_dir);
    write_theta_tables_csv(result, (fs::path(tables_dir) / "theta_convergence.csv").string());
  }
  std::cout << "verify: " << (result.pass() ? "all identities hold" : "IDENTITY FAILURES")
            << ", report in " << out_path << "\n";
  return result.pass() ? 0 : 1;
}

int run_continuation(const std::string& config_path) {
  SolverConfig cfg = parse_config_file(config_path);
  ContinuationReport cr = epsilon_continuation(cfg);
  fs::path dir(cfg.output_dir);
  fs::create_directories(dir);

  for (std::size_t k = 0; k < cr.runs.size(); ++k) {
    char sub[64];
    std::snprintf(sub, sizeof(sub), "eps_%g", cr.epsilons[k]);
    SolverConfig member = cfg;
    member.epsilons = {cr.epsilons[k]};
    emit_run_outputs(member, cr.runs[k], dir / sub);
  }

  json j;
  j["epsilons"] = cr.epsilons;
  j["differences"] = cr.differences;
  j["slope"] = cr.slope;
  j["partial"] = cr.partial;
  j["completed"] = cr.completed;
  write_text_file((dir / "continuation.json").string(), j.dump(2));
  if (cr.extrapolated) write_csv(*cr.extrapolated, (dir / "extrapolated.csv").string());

  std::cout << "continuation: slope " << cr.slope << (cr.partial ? " (partial)" : "")
            << ", outputs in " << dir.string() << "\n";
  return cr.partial ? 1 : 0;
}

RunReport load_run_dir(const fs::path& dir) {
  RunReport report;
  std::string manifest = read_text_file((dir / "manifest.json").string());
  json m = json::parse(manifest);
  const json& cfg = m.at("config");
  const json& geom = cfg.at("geometry");
  if (geom.is_string()) {
    report.geometry = geom.get<std::string>() == "plane" ? Geometry(Plane{})
                                                         : Geometry(HalfPlane{});
  } else {
    report.geometry = Strip{geom.at("strip").get<double>()};
  }
  report.gamma = cfg.value("gamma", 0.5);
  report.gamma_prime = cfg.value("gamma_prime", report.gamma);
  report.epsilon = m.value("epsilon", 0.0);
  report.series = read_series_csv((dir / "series.csv").string());

  std::vector<std::pair<double, fs::path>> snaps;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("snap_", 0) == 0 && name.size() > 9) {
      double t = std::stod(name.substr(5, name.size() - 9));
      snaps.push_back({t, entry.path()});
    }
  }
  std::sort(snaps.begin(), snaps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [t, p] : snaps) report.snapshots.push_back({t, read_csv(p.string())});
  if (!report.snapshots.empty()) report.dx = report.snapshots.front().f.dx();
  return report;
}

int run_compare(const std::string& dir_a, const std::string& dir_b, double mu,
                const std::string& out_path) {
  RunReport a = load_run_dir(dir_a);
  RunReport b = load_run_dir(dir_b);
  StabilityCertificate cert = stability_compare(a, b, mu);
  json j;
  j["mu"] = cert.mu;
  j["envelope_constant"] = cert.envelope_constant;
  j["initial_difference"] = cert.initial_difference;
  j["final_difference"] = cert.final_difference;
  j["no_superexponential"] = cert.no_superexponential;
  j["times"] = cert.times;
  j["differences"] = cert.differences;
  write_text_file(out_path, j.dump(2));
  std::cout << "compare: K = " << cert.envelope_constant << ", D(0) = " << cert.initial_difference
            << ", D(T) = " << cert.final_difference << ", certificate in " << out_path << "\n";
  return cert.no_superexponential ? 0 : 1;
}

int run_norms(const std::string& input, double gamma, double mu, const std::string& out_path) {
  GridFunction g = read_csv(input);
  std::vector<std::pair<std::string, NormKind>> kinds = {
      {"tilde_l2", NormKind::tilde_l2()},
      {"tilde_h1", NormKind::tilde_hk(1)},
      {"tilde_h2", NormKind::tilde_hk(2)},
      {"tilde_h3", NormKind::tilde_hk(3)},
      {"ddot_c_half", NormKind::ddot_c(0.5)},
      {"tilde_h3_gamma", NormKind::tilde_hk_gamma(3, gamma)},
      {"c1_gamma_holder", NormKind::ck_gamma_holder(1, gamma)},
      {"c2_gamma_gamma", NormKind::ck_gamma_gamma(2, gamma)},
      {"c2_gamma", NormKind::ck_gamma(2, gamma)},
      {"tilde_l2_mu", NormKind::tilde_l2_mu(mu)},
  };
  std::string csv = "norm,value\n";
  char buf[128];
  for (const auto& [name, kind] : kinds) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g\n", name.c_str(), local_norm(g, kind));
    csv += buf;
  }
  if (out_path.empty())
    std::cout << csv;
  else
    write_text_file(out_path, csv);
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Muskat interface-evolution laboratory"};
  app.require_subcommand(1);

  auto* simulate = app.add_subcommand("simulate", "run one configuration with monitors");
  std::string sim_config, sim_output;
  simulate->add_option("--config", sim_config, "JSON config path")->required();
  simulate->add_option("--output", sim_output, "override output directory");

  auto* verify = app.add_subcommand("verify", "numerically verify the closed-form identities");
  std::string suite = "identities";
  std::uint64_t seed = kDefaultSeed;
  std::string verify_out = "identities.json";
  std::string tables_dir;
  verify->add_option("--suite", suite, "suite name (identities)");
  verify->add_option("--seed", seed, "sweep seed");
  verify->add_option("--out", verify_out, "output JSON path");
  verify->add_option("--tables", tables_dir, "directory for convergence CSV tables");

  auto* continuation = app.add_subcommand("continuation", "epsilon-schedule Cauchy-rate study");
  std::string cont_config;
  continuation->add_option("--config", cont_config, "JSON config path (>=2 epsilons)")->required();

  auto* compare = app.add_subcommand("compare", "two-run stability certificate");
  std::string dir_a, dir_b, compare_out = "stability.json";
  double mu = 0.0;
  compare->add_option("dir_a", dir_a, "first run directory")->required();
  compare->add_option("dir_b", dir_b, "second run directory")->required();
  compare->add_option("--mu", mu, "weight parameter mu >= 0");
  compare->add_option("--out", compare_out, "certificate path");

  auto* norms = app.add_subcommand("norms", "norm table for a CSV-supplied function");
  std::string norms_input, norms_out;
  double norms_gamma = 0.5, norms_mu = 0.0;
  norms->add_option("--input", norms_input, "CSV with header x,f")->required();
  norms->add_option("--gamma", norms_gamma, "gamma in (0, 1/2]");
  norms->add_option("--mu", norms_mu, "mu for tilde-L^{2,mu}");
  norms->add_option("--out", norms_out, "output CSV path (stdout when absent)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim_config, sim_output);
    if (verify->parsed()) {
      if (suite != "identities") {
        std::cerr << "unknown suite '" << suite << "'\n";
        return 2;
      }
      return run_verify(seed, verify_out, tables_dir);
    }
    if (continuation->parsed()) return run_continuation(cont_config);
    if (compare->parsed()) return run_compare(dir_a, dir_b, mu, compare_out);
    if (norms->parsed()) return run_norms(norms_input, norms_gamma, norms_mu, norms_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << app.help();
  return 2;
}

}  // namespace muskat::cli
