#include <iostream>
#include <string>
#include <vector>

#include "taxdist/cli.hpp"

int main(int argc, char** argv) {
    return taxdist::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
