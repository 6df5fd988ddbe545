#include "wiro/cli.hpp"

int main(int argc, char** argv) { return wiro::run_cli(argc, argv); }
