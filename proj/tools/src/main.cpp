#include "commands.hpp"

#include "roc/error.hpp"

#include <iostream>

int main(int argc, char** argv) {
  using namespace roc::cli;
  CLI::App app{"Random overlapping communities: sampling, walk statistics and moment tools", "roc"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--json", globals.json, "Print JSON instead of text");
  app.add_option("--threads", globals.threads, "Worker threads (0: all cores)");
  std::function<int()> action;
  addCommands(app, globals, action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kArgument;
  }

  try {
    return action ? action() : kArgument;
  } catch (const roc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case roc::ErrorKind::Infeasible:
        return kInfeasible;
      case roc::ErrorKind::Io:
        return kIo;
      default:
        return kArgument;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kArgument;
  }
}
