#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rdtsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Subcommands: gen, solve, bench, compare, render.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args[0] is the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdtsp::cli
