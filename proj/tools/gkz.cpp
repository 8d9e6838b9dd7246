#include "gkz/cli.hpp"

int main(int argc, char** argv) { return gkz::run_cli(argc, argv); }
