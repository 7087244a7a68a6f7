// Copyright 2026 The pkn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pkn::cli {

// Runs one command given argv-style arguments (program name excluded) and
// returns the process exit code: 0 on success, 1 when an analysis comes
// back negative (no relating element, unreachable vertices, a failed
// verification, an empty labeling search), 2 on usage, file, or schema
// problems.  All normal output goes to `out`, diagnostics to `err`; when
// --output is given the payload is written to that file instead.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pkn::cli
