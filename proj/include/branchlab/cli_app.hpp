#ifndef BRANCHLAB_CLI_APP_HPP
#define BRANCHLAB_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace branchlab {

// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource bound exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace branchlab

#endif
