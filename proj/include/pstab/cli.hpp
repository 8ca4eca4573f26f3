#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pstab {

// Exit statuses of the command-line front end.
inline constexpr int exit_ok = 0;
inline constexpr int exit_user_error = 1;
inline constexpr int exit_proof_violation = 2;

// Runs one `pstab` invocation. `args` excludes the program name.
// Subcommands: validate, order, diagram, bottleneck, crossings, verify, gen.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pstab
