#include <iostream>
#include <string>
#include <vector>

#include "apofamily/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty()) args = {"--help"};
    if (args.size() == 1 && (args[0] == "--help" || args[0] == "-h" || args[0] == "help"))
        args = {"compute", "--help"};  // any command token; --help short-circuits
    return apofamily::run_cli(args, std::cout, std::cerr);
}
