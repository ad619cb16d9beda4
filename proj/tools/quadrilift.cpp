#include <iostream>

#include "quadrilift/cli.hpp"
#include "quadrilift/error.hpp"

int main(int argc, char** argv) {
    quadrilift::CliEnvironment env;
    try {
        env = quadrilift::environment_from_process();
    } catch (const quadrilift::Error& e) {
        std::cerr << e.what() << "\n";
        return quadrilift::kExitInput;
    }
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto r = quadrilift::run_command(args, env);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
