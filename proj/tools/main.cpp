#include "hypermonad/cli.hpp"

int main(int argc, char** argv) { return hypermonad::run_cli(argc, argv); }
