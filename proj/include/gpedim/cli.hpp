#ifndef GPEDIM_CLI_HPP
#define GPEDIM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gpedim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFails = 1;
inline constexpr int kExitUsage = 2;

// Runs one gpedim invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gpedim

#endif
