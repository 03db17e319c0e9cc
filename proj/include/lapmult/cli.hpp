// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lapmult::cli {

/// Runs one CLI invocation. argv-style arguments without the program name.
/// Exit codes: 0 success, 1 domain error (bad input), 2 exhausted search
/// bound. With --json the result (or {"error": ...}) goes to `out` as one
/// JSON document; `err` carries human diagnostics only.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lapmult::cli
