#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropknap {

namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int unknown = 2;
inline constexpr int usage = 64;
inline constexpr int data = 65;
inline constexpr int no_input = 66;
inline constexpr int internal = 70;
inline constexpr int cant_create = 73;
}  // namespace exit_code

/// Runs the command line in args (args[0] is the program name). Reports go
/// to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropknap
