#include "cli.hpp"

int main(int argc, char** argv) { return symideal::cli::run(argc, argv); }
