#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modmon::cli {

struct RunResult {
  int exit = 0;
  std::string out;
  std::string err;
};

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // inequivalent, unrelated, failing laws, type error
inline constexpr int kExitParse = 2;
inline constexpr int kExitFuel = 3;
inline constexpr int kExitUsage = 64;

// `args` excludes the program name. `input` backs the `-` term argument.
RunResult run(const std::vector<std::string>& args, std::istream& input);

}  // namespace modmon::cli
