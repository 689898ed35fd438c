#include "grodiag/cli.hpp"

int main(int argc, char** argv) { return grodiag::cli_main(argc, argv); }
