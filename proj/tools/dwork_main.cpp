#include <CLI11.hpp>

#include "dwork/bigfloat.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Twisted-sector invariants of Fermat polynomial singularities"};
  app.require_subcommand(0, 1);
  int rc = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return rc;
}
