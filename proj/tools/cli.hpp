#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace shiftlab::cli {

// Runs one subcommand. JSON envelopes go to `out`; a single-line diagnostic
// goes to `err` on failure. Exit codes: 0 success, 2 usage or validation
// error, 3 resource cap exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shiftlab::cli
