#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace netarc {

// Batch command surface: construct, verify, search, table, equiv, suite.
// Returns 0 on success, 1 on verification failure, 2 on invalid input,
// 3 on budget exhaustion. Structured output goes to `out`, diagnostics
// to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace netarc
