#include "acute/cli.hpp"

int main(int argc, char** argv) { return acute::cli::run(argc, argv); }
