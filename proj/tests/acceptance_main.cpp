#include <cstdlib>
#include <iostream>

#include "abptk/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 20240917;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    bool ok = abptk::print_acceptance(std::cout, seed);
    return ok ? 0 : 1;
}
