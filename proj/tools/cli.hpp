#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arthur::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInternalError = 2;
inline constexpr int kCapExceeded = 3;

// Runs one command. `args` excludes the program name. `in` is read when the
// input path is "-". Exactly one JSON document is written to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace arthur::cli
