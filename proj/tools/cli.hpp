#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylkac::cli {

// Dispatches one subcommand; output is byte-for-byte deterministic for
// identical inputs. Exit codes: 0 success, 1 usage error, 2 input
// validation, 3 algorithm failure, 4 internal invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace weylkac::cli
