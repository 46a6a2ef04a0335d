#pragma once

#include <string>
#include <vector>

namespace muskat::cli {

/// Subcommand dispatcher for {simulate, verify, continuation, compare, norms}.
/// Returns the process exit status: 0 when all attached verdicts pass,
/// 1 on verdict failure, 2 on usage errors.
int dispatch(const std::vector<std::string>& args);

}  // namespace muskat::cli
