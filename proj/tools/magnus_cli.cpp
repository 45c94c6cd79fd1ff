#include "magnus/cli.hpp"

int main(int argc, char** argv) { return magnus::cli::run(argc, argv); }
