// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "matmed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return matmed::run_cli(args, std::cout, std::cerr);
}
