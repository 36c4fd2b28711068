#pragma once

#include <ostream>

namespace pareto_smooth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerdictFailed = 2;

/// Machine-readable output goes to --out when given, otherwise to `out`.
/// The human-readable summary goes to `out` when --out is given, otherwise to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pareto_smooth::cli
