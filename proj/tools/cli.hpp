#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdiep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Normal output goes
/// to `out`, warnings and errors to `err`.
///
/// Exit codes: 0 success, 1 domain failure (an infeasible spectrum under
/// `construct --strict`, a matrix that fails `verify`, an eigensolver that
/// does not converge), 2 usage error (bad flag, unreadable file, malformed
/// spectrum).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sdiep::cli
