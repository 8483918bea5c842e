#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace broomrank::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotUnimodal = 1;  // classify only
inline constexpr int kExitFailure = 1;      // verify / count disagreement
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace broomrank::cli
