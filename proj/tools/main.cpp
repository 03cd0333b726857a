#include "hopfrep/cli.hpp"

int main(int argc, char** argv) {
  return hopfrep::cli::run(argc, argv);
}
