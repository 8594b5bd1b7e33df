#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qclaw::cli {

/// Runs the command line; returns 0 on success, 1 on a failed verification,
/// 2 on a usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qclaw::cli
