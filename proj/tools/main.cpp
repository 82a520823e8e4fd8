#include "cubisym/cli.hpp"

int main(int argc, char** argv) { return cubisym::cli::run(argc, argv); }
