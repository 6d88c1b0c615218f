// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return drep::cli::run(args, std::cout, std::cerr);
}
