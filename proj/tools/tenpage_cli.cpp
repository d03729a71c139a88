// Command line front end; subcommands are wired up as the library lands.
#include <cstdio>

int main(int argc, char** argv) {
  (void)argc;
  (void)argv;
  std::fprintf(stderr, "not yet implemented\n");
  return 2;
}
