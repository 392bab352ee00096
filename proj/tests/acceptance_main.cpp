#include <cstdlib>
#include <iostream>

#include "surfcyc/acceptance.hpp"

int main(int argc, char** argv) {
    int jobs = 1;
    if (argc > 1) {
        jobs = std::atoi(argv[1]);
        if (jobs < 1) jobs = 1;
    }
    return surfcyc::print_acceptance(std::cout, jobs);
}
