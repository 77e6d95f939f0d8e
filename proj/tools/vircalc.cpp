#include "vircalc/cli.hpp"

int main(int argc, char** argv) { return vircalc::cli::run(argc, argv); }
