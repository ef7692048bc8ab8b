#include "sgq/cli.hpp"

int main(int argc, char** argv) { return sgq::cli::main(argc, argv); }
