#include <string>
#include <vector>

#include "nes/cli_io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nes::dispatch(args);
}
