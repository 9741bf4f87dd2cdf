#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "massey/cochain.hpp"

namespace massey {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // bad arguments, parse errors, rejected inputs
inline constexpr int kExitInternal = 2;  // an internal consistency check failed

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A corpus id, a DSL document or a JSON table file.
AlgebraPtr load_algebra(const std::string& source);

}  // namespace massey
