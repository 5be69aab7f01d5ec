#include "wzgain/cli.hpp"

int main(int argc, char** argv) { return wzgain::run_cli(argc, argv); }
