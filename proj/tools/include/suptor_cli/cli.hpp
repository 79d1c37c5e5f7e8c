#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace suptor::cli {

enum ExitCode : int { Ok = 0, ArgumentFailure = 1, ComputationFailure = 2, HypothesisFailure = 3 };

/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace suptor::cli
