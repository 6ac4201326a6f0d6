#pragma once

// Command-line front end. Exit codes: 0 success / all checks pass,
// 1 verification failures (report still written), 2 usage or domain error.

#include <iosfwd>
#include <string>
#include <vector>

namespace infsub {

/// Environment variable holding the default for --jobs.
inline constexpr const char *kJobsEnv = "INFSUB_JOBS";

/// Runs one invocation; `args` excludes the program name. Output JSON goes to
/// `out` (or --out), diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace infsub
