/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_TOOLS_CLI_APP_HPP
#define RELAYDMT_TOOLS_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace relaydmt::cli {

// Full command driver, separated from main() so tests can run it in-process.
// args excludes the program name. Returns the process exit code:
// 0 success, 2 invalid configuration or flags, 3 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace relaydmt::cli

#endif
