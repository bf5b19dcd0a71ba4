#include "simba/cli_app.hpp"

int main(int argc, char** argv) { return simba::cli::run(argc, argv); }
