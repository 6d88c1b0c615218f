// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace drep::cli {

struct BundledFile {
  const char* name;
  const char* text;
};

const std::vector<BundledFile>& bundled_files();

/// Runs the command line `args` (args[0] is the program name).
/// Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drep::cli
