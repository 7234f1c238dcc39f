#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ghc {

/// Runs one CLI invocation (args exclude the program name). Exit status:
/// 0 success, 1 domain error (structured JSON on err), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghc
