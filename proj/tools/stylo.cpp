#include "stylo/cli.hpp"

int main(int argc, char** argv) { return stylo::cli::run(argc, argv); }
