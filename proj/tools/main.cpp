#include "frackansa/bench.hpp"

int main(int argc, char** argv) { return frackansa::cli_main(argc, argv); }
