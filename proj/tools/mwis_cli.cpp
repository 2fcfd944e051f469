#include "mwis/cli.hpp"

int main(int argc, char** argv) { return mwis::run_cli(argc, argv); }
