#include "oscbath/cli.hpp"

int main(int argc, char** argv) { return oscbath::run_cli(argc, argv); }
