#pragma once

#include <CLI11.hpp>

#include <functional>

namespace roc::cli {

enum ExitCode : int {
  kOk = 0,
  kArgument = 2,
  kInfeasible = 3,
  kIo = 4,
};

struct Globals {
  bool json = false;
  unsigned threads = 1;
};

// Registers every subcommand on app; the selected one stores its runner in
// action.
void addCommands(CLI::App& app, Globals& globals, std::function<int()>& action);

}  // namespace roc::cli
