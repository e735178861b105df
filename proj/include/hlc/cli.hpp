#ifndef HLC_CLI_HPP
#define HLC_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace hlc::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitColorable = 0;
inline constexpr int kExitUncolorable = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInternalInvariant = 3;
inline constexpr int kExitBudgetExceeded = 4;

// Runs one CLI invocation; args excludes the program name.
int run(std::vector<std::string> args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

} // namespace hlc::cli

#endif
