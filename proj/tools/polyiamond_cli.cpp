#include "polyiamond/cli.hpp"

int main(int argc, char** argv) { return polyiamond::cli::main(argc, argv); }
