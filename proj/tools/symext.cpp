#include "symext/cli.hpp"

int main(int argc, char** argv) { return symext::run_cli(argc, argv); }
