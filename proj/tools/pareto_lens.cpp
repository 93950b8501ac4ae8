#include <iostream>

#include "pareto_lens/cli.hpp"

int main(int argc, char** argv) { return pareto_lens::cli::run(argc, argv, std::cout, std::cerr); }
