#include "muskat/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace muskat {

using nlohmann::json;

namespace {

ProfileSpec parse_profile(const json& j) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("config: profile must be an object with one named entry");
  const auto it = j.begin();
  const std::string& name = it.key();
  const json& p = it.value();
  if (name == "constant") {
    ConstantProfile c;
    c.c = p.at("c").get<double>();
    return c;
  }
  if (name == "sine") {
    SineProfile s;
    s.amplitude = p.at("A").get<double>();
    s.wavenumber = p.at("k").get<double>();
    s.base = p.value("base", 0.0);
    return s;
  }
  if (name == "bump") {
    BumpProfile b;
    b.amplitude = p.at("A").get<double>();
    b.width = p.value("w", 2.0);
    b.center = p.value("x_c", 0.0);
    b.base = p.value("base", 0.0);
    return b;
  }
  if (name == "invasion") {
    InvasionProfile inv;
    double h = p.value("height", 1.0);
    inv.height_left = p.value("height_left", h);
    inv.height_right = p.value("height_right", h);
    if (p.contains("gap")) {
      auto gap = p.at("gap");
      inv.gap_lo = gap.at(0).get<double>();
      inv.gap_hi = gap.at(1).get<double>();
    }
    inv.smoothing = p.value("smoothing", 0.5);
    return inv;
  }
  throw std::invalid_argument("config: unknown profile '" + name + "'");
}

json profile_to_json(const ProfileSpec& spec) {
  json out;
  if (const auto* c = std::get_if<ConstantProfile>(&spec)) {
    out["constant"] = {{"c", c->c}};
  } else if (const auto* s = std::get_if<SineProfile>(&spec)) {
    out["sine"] = {{"A", s->amplitude}, {"k", s->wavenumber}, {"base", s->base}};
  } else if (const auto* b = std::get_if<BumpProfile>(&spec)) {
    out["bump"] = {{"A", b->amplitude}, {"w", b->width}, {"x_c", b->center}, {"base", b->base}};
  } else {
    const auto& inv = std::get<InvasionProfile>(spec);
    out["invasion"] = {{"height_left", inv.height_left},
                       {"height_right", inv.height_right},
                       {"gap", {inv.gap_lo, inv.gap_hi}},
                       {"smoothing", inv.smoothing}};
  }
  return out;
}

}  // namespace

SolverConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
  }
  SolverConfig cfg;

  const auto& geom = j.at("geometry");
  if (geom.is_string()) {
    std::string name = geom.get<std::string>();
    if (name == "plane")
      cfg.geometry = Plane{};
    else if (name == "half_plane")
      cfg.geometry = HalfPlane{};
    else
      throw std::invalid_argument("config: geometry must be plane, half_plane or {strip: l}");
  } else if (geom.is_object() && geom.contains("strip")) {
    cfg.geometry = Strip{geom.at("strip").get<double>()};
  } else {
    throw std::invalid_argument("config: geometry must be plane, half_plane or {strip: l}");
  }

  cfg.half_period = j.at("L").get<double>();
  cfg.n = j.at("n").get<std::size_t>();
  cfg.t_end = j.at("t_end").get<double>();
  cfg.gamma = j.value("gamma", 0.5);
  cfg.gamma_prime = j.value("gamma_prime", cfg.gamma);
  if (j.contains("dt")) {
    const auto& dt = j.at("dt");
    if (dt.contains("fixed"))
      cfg.dt = DtPolicy::fixed(dt.at("fixed").get<double>());
    else if (dt.contains("adaptive"))
      cfg.dt = DtPolicy::adaptive(dt.at("adaptive").get<double>());
    else
      throw std::invalid_argument("config: dt must be {fixed: v} or {adaptive: safety}");
  }
  if (j.contains("epsilons")) cfg.epsilons = j.at("epsilons").get<std::vector<double>>();
  cfg.y_max = j.value("y_max", 0.0);
  std::string form = j.value("form", std::string("primary"));
  if (form == "primary")
    cfg.form = RhsForm::Primary;
  else if (form == "alternate")
    cfg.form = RhsForm::Alternate;
  else
    throw std::invalid_argument("config: form must be primary or alternate");
  cfg.profile = parse_profile(j.at("profile"));
  cfg.output_dir = j.value("output_dir", std::string("out"));
  cfg.cadence = j.value("cadence", 0.0);
  cfg.threads = j.value("threads", 0u);

  try {
    cfg.validate();
    // Surfaces range violations (e.g. strip profile exceeding l) at parse time.
    sample_profile(cfg.profile, cfg.geometry, cfg.half_period, cfg.n);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return cfg;
}

SolverConfig parse_config_file(const std::string& path) {
  return parse_config_json(read_text_file(path));
}

std::string config_to_json(const SolverConfig& config) {
  json j;
  if (is_plane(config.geometry))
    j["geometry"] = "plane";
  else if (is_half_plane(config.geometry))
    j["geometry"] = "half_plane";
  else
    j["geometry"] = {{"strip", strip_height(config.geometry)}};
  j["L"] = config.half_period;
  j["n"] = config.n;
  j["gamma"] = config.gamma;
  j["gamma_prime"] = config.gamma_prime;
  j["t_end"] = config.t_end;
  if (config.dt.kind == DtPolicy::Kind::Fixed)
    j["dt"] = {{"fixed", config.dt.value}};
  else
    j["dt"] = {{"adaptive", config.dt.value}};
  j["epsilons"] = config.epsilons;
  j["y_max"] = config.effective_y_max();
  j["form"] = config.form == RhsForm::Primary ? "primary" : "alternate";
  j["profile"] = profile_to_json(config.profile);
  j["output_dir"] = config.output_dir;
  j["cadence"] = config.effective_cadence();
  // nlohmann::json objects keep keys sorted, so this dump is canonical.
  return j.dump(2);
}

std::uint64_t config_hash(const SolverConfig& config) {
  std::string canon = config_to_json(config);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string manifest_json(const SolverConfig& config, const RunReport& report,
                          std::uint64_t seed) {
  json j;
  j["config"] = json::parse(config_to_json(config));
  char hash_hex[32];
  std::snprintf(hash_hex, sizeof(hash_hex), "%016llx",
                static_cast<unsigned long long>(config_hash(config)));
  j["config_hash"] = hash_hex;
  j["versions"] = {{"muskat", "0.1.0"}, {"format", 1}};
  j["seed"] = seed;
  j["timings"] = {{"run_seconds", report.wall_seconds}};
  j["rows"] = report.series.size();
  j["snapshots"] = report.snapshots.size();
  j["epsilon"] = report.epsilon;
  if (report.abort) {
    j["abort"] = {{"reason", report.abort->reason},
                  {"t", report.abort->t},
                  {"detail", report.abort->detail}};
  } else {
    j["abort"] = nullptr;
  }
  return j.dump(2);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace muskat
