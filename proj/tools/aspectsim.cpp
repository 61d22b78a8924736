#include "commands.hpp"

int main(int argc, char** argv) { return aspectsim::cli::run(argc, argv); }
