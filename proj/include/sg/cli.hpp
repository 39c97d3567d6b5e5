#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sg {

/// Dispatches one CLI request. Exit status: 0 on success, 1 on an
/// analysis-level failure (non-total game, violated precondition), 2 on a
/// parse or usage failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sg
