#pragma once

#include <iosfwd>

#include "hgsi/error.hpp"

namespace hgsi {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit status for a library error: 2 for unreadable or malformed input,
/// 3 for everything else (infeasible parameters, empty selections, ...).
int exit_code_for(ErrorCode code) noexcept;

/// Entry point shared by the executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hgsi
