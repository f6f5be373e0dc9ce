#include "help/cli.hpp"

int main(int argc, char** argv) { return help::cli::run(argc, argv); }
