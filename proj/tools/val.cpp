#include <iostream>

#include "valtree/cli.hpp"

int main(int argc, char** argv) {
    return valtree::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
