#include "thzkit/cli.hpp"

int main(int argc, char** argv) { return thzkit::cli::run(argc, argv); }
