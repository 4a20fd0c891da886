#include "fairsel/cli.hpp"

int main(int argc, char** argv) { return fairsel::run_cli(argc, argv); }
