#pragma once

/**
 * @file cli.hpp
 * @brief ringlab command driver (also used in-process by the test suites).
 *
 * Exit codes: 0 success; 1 check failed under --strict; 2 usage or parse
 * error; 3 carrier cap exceeded.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace ringlab {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlab
