#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `gyro` command line. `args` excludes the program name.
///
///   build --n K --format text|csv [--out PATH]
///   verify --n K [--report PATH]
///   lattice --n K --dot [--out PATH]
///   holomorph --n K
///   iso --left FILE --right FILE
///   check FILE [--report PATH]
///
/// Returns 0 on success, 1 when verification fails (or iso finds no map),
/// 2 on bad arguments or unreadable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyro::cli
