#include "hlc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hlc::cli::run(std::move(args));
}
