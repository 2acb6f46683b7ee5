#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sgcf::cli {

enum ExitCode : int { success = 0, domain_error = 1, usage_error = 2 };

/// Runs `sgcf <command> <graph-file> [flags]`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgcf::cli
