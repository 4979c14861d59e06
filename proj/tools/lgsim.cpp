#include <iostream>

#include "cli_app.hpp"

int main(int argc, char** argv) {
  lgsim::RunConfig cfg;
  CLI::App app{"lgsim"};
  lgsim::build_cli(app, cfg);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return lgsim::kExitConfig;
  }
  return lgsim::open_and_run(cfg, std::cerr);
}
