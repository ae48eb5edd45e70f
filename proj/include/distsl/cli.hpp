#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distsl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 1 on a domain error (or a failed verify-* verdict) and 2 on a
// usage error. `in` backs "--edgelist -".
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace distsl
