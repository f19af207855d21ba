#include "eulercf/cli.hpp"

int main(int argc, char** argv) { return eulercf::cli::run(argc, argv); }
