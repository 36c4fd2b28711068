#include <iostream>

#include "pareto_smooth/cli/cli.hpp"

int main(int argc, char** argv) { return pareto_smooth::cli::run(argc, argv, std::cout, std::cerr); }
