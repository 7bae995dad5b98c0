#pragma once
// Command implementations behind the lattice-ramsey binary. Each invocation
// writes one JSON document (or DOT text for export-dot) to `out` and returns
// the exit code: 0 success/holds, 2 validation error, 3 arrow fails with a
// certificate, 4 bound or timeout. The corpus runner re-enters run_cli for
// each case, so golden outputs compare byte-for-byte.

#include <ostream>
#include <string>
#include <vector>

namespace latram {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace latram
