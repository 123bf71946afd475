#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppl {

/// Parses and executes one CLI invocation (argv without the program
/// name).  All regular output goes to `out`, errors to `err`.  Returns
/// the process exit code: 0 success, 1 usage error, 2 invalid input,
/// 3 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ppl
