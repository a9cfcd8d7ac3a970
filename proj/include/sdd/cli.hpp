#pragma once

// Command-line front end. `run_cli` holds all logic so it can be exercised in-process.
//
// Exit codes: 0 success, 1 internal error (failed self-check), 2 usage or genome syntax
// error, 3 semantic input error, 4 resource cap exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace sdd {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdd
