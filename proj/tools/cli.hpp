#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gordian::cli {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerificationFailed = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gordian::cli
