#include "anet/cli.hpp"

int main(int argc, char** argv) { return anet::cli::run(argc, argv); }
