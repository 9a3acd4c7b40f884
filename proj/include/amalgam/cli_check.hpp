#pragma once

#include <string>

#include "amalgam/acceptance.hpp"

namespace amalgam {

// Exercises the command-line tool end to end on a generated fixture corpus:
// canonical round trips, the exit-code contract (0 holds, 1 fails/infeasible,
// 2 usage or parse error), JSON report determinism. `cli_path` is the binary
// under test; fixtures live in a fresh temporary directory.
SuiteOutcome run_cli_roundtrip(const std::string& cli_path);

}  // namespace amalgam
