#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pmt/contour.hpp"

namespace pmt::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, numerical = 3 };

/// Runs one command. args excludes the program name. The JSON envelope goes
/// to out, structured errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "RE", "RE+IMi", "RE-IMi", "IMi". Throws Error(InvalidArgument).
Complex parse_complex(std::string_view text);

}  // namespace pmt::cli
