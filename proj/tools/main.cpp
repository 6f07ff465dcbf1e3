#include "delball/cli.hpp"

int main(int argc, char** argv) { return delball::cli::run_main(argc, argv); }
