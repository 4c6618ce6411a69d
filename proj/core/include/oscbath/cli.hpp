// cli.hpp — operator-facing entry point, exposed as a library function so the
// binary stays a one-liner and tests can drive it in-process.
#pragma once

#include <string>
#include <vector>

namespace oscbath {

/// Runs the command line tool. Exit codes: 0 success, 1 config error,
/// 2 numeric/guard violation, 3 bound-violation finding.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace oscbath
