#include <itlab/cli.hpp>

int main(int argc, char** argv) { return itlab::run_cli(argc, argv); }
