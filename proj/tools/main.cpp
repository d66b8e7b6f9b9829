#include "cli.hpp"

int main(int argc, char** argv) { return brieskorn::cli::run(argc, argv); }
