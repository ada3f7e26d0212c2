#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zigzag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitAnchorFailed = 2;

// Environment variable supplying the default --format.
inline constexpr const char* kFormatEnv = "ZIGZAG_FORMAT";

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: argv[0] is supplied.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zigzag::cli
