#pragma once

#include <iosfwd>

namespace spatialkit {

// Entry point of the `spatialkit` tool. Returns the process exit code:
// 0 on success, 1 on a runtime error, 2 on a usage error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace spatialkit
