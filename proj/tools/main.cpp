#include <iostream>

#include "gpedim/cli.hpp"

int main(int argc, char** argv) {
    return gpedim::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
