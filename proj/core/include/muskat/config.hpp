#pragma once

#include <cstdint>
#include <string>

#include "muskat/evolution.hpp"

namespace muskat {

/// Parses the run configuration from its JSON document:
///   {geometry: "plane"|"half_plane"|{"strip": l}, L, n, gamma, t_end,
///    dt: {"fixed": v}|{"adaptive": s}, epsilons: [..], y_max,
///    form: "primary"|"alternate", profile: {...}, output_dir, cadence}
/// Defaults: gamma 0.5, form primary, y_max = L, dt adaptive 0.2,
/// epsilons [0], cadence t_end/50.
SolverConfig parse_config_json(const std::string& text);
SolverConfig parse_config_file(const std::string& path);

/// Canonical JSON echo of a config (stable key order), used for manifests.
std::string config_to_json(const SolverConfig& config);

/// FNV-1a over the canonical serialization; stable under field reordering
/// of the input document.
std::uint64_t config_hash(const SolverConfig& config);

/// Run manifest: config echo + hash, versions, per-phase timings, seed,
/// abort record.
std::string manifest_json(const SolverConfig& config, const RunReport& report,
                          std::uint64_t seed);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace muskat
