#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isomet::cli {

/// Exit codes: 0 success, 1 domain error or counterexample, 2 usage or parse
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isomet::cli
