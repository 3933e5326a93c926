#include "veritag/cli/app.hpp"

int main(int argc, char** argv) { return veritag::cli::run_command(argc, argv); }
