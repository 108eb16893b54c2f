#include "treebij/cli.hpp"

int main(int argc, char** argv) { return treebij::cli::run_main(argc, argv); }
