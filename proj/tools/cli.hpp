#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dfmax::cli {

// Runs one subcommand. args excludes the program name. Returns the exit status:
// 0 on success, 1 when a module guard or input check fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

} // namespace dfmax::cli
