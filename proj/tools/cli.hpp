#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primaltop {

/// Runs one CLI invocation. `args` excludes the program name. Exit codes:
/// 0 ok, 1 parse/usage error, 2 validation failure, 3 internal invariant
/// breach (a direct theorem failing counts as one).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace primaltop
