#include "setcalc/io/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    if (!setcalc::io::apply_environment(std::cerr)) {
        return setcalc::io::kExitBadArguments;
    }
    return setcalc::io::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
