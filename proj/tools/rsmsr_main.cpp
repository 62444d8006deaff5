#include "rsmsr/cli_app.hpp"

int main(int argc, char** argv) { return rsmsr::cli::run_cli(argc, argv); }
