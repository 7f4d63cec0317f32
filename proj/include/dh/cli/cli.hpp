#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dh::cli {

inline constexpr int kSchemaVersion = 1;

/// Runs the `dh` command line (args exclude the program name). Returns the
/// process exit code: 0 success, 1 negative verdict or failed check, 2 usage
/// or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dh::cli
