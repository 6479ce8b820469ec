#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binpack::cli {

/// Exit statuses: the only three the tool ever returns.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `binpack` executable. `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binpack::cli
