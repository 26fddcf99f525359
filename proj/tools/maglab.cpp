#include "cli.hpp"

int main(int argc, char** argv) { return maglab::cli::run(argc, argv, std::cout, std::cerr); }
