#ifndef HYPERLAB_TOOLS_CLI_HPP
#define HYPERLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlab::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kSizeGuard = 3,
};

// Entry point shared by the executable and the tests. args[0] is the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlab::cli

#endif  // HYPERLAB_TOOLS_CLI_HPP
