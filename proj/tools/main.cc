#include <unistd.h>

#include <iostream>

#include "cli.h"

int main(int argc, char** argv) {
  return ada::cli::run(argc, argv, std::cout, std::cerr, {.stdout_is_tty = ::isatty(1) == 1});
}
