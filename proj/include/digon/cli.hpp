#pragma once

// Command-line front end. Exit status: 0 success / no violations, 1 violation
// or audit failure found, 2 invalid input.

#include <ostream>

namespace digon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;
inline constexpr int kExitInvalid = 2;

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace digon::cli
