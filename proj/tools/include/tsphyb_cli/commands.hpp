#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tsphyb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitConfig = 2;

/// Full command line minus the program name, e.g. {"solve", "--instance", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tsphyb::cli
