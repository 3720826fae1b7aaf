#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crn::cli {

enum ExitCode : int { kApplies = 0, kDoesNotApply = 1, kInputError = 2, kResourceCap = 3 };

// Entry point of the `crn` tool; writes reports to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crn::cli
