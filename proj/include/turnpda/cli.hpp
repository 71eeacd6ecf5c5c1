#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "turnpda/mathkit.hpp"
#include "turnpda/turn_search.hpp"

namespace turnpda {

inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataErr = 65;

/// Runs one subcommand; `args` excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// CSV with header n,samples,max_min_turns,bound_value,within_bound. Rows whose
/// search hit a cap or rejected a sample say "capped" / "rejected" instead of a verdict.
std::string emit_curve_csv(const CurveTable& table, const BoundFn& bound, double tolerance = 1e-9);

}  // namespace turnpda
