#ifndef QPART_CLI_HPP
#define QPART_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qpart::cli {

/* Runs one CLI invocation. `args` excludes the program name. Exit codes:
 * 0 success, 1 verification failure, 2 usage or input error. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpart::cli

#endif
