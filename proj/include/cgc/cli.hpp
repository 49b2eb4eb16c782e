#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cgc {

/// The command line front end; `args` excludes the program name.
/// Exit status: 0 success, 1 negative result (untypeable term, failed law),
/// 2 usage, input or syntax error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cgc
