#include "ulrichnorm/cli/cli.hpp"

int main(int argc, char** argv) { return ulrichnorm::cli::run(argc, argv); }
