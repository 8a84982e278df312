#include <iostream>
#include <string>
#include <vector>

#include "qtail/cli.hpp"

int main(int argc, char** argv) {
    return qtail::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
