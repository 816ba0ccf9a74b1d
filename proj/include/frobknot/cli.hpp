#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frobknot::cli {

enum ExitCode : int { Ok = 0, Counterexample = 1, InputError = 2 };

/// Run one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobknot::cli
