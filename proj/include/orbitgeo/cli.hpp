#pragma once

namespace orbitgeo::cli {

// Full command-line entry point. Subcommands: family, hyperboloid, curvature,
// check. Exit codes: 0 success, 1 tolerance failure, 2 input error.
int run(int argc, const char* const* argv);

}  // namespace orbitgeo::cli
