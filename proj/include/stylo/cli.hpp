#pragma once

#include <string>
#include <vector>

namespace stylo::cli {

/// Runs the command-line front end. Returns the process exit status:
/// 0 success, 1 usage error, 2 data error. Exposed as a function so tests
/// can drive the tool in-process.
int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace stylo::cli
