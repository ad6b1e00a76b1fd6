#include "commands.hpp"

#include <iostream>
#include <vector>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = frey::cli::run_command(args);
    if (!result.report.is_null() && !result.report.empty())
        std::cout << result.report.dump(2) << "\n";
    if (!result.error.empty()) std::cerr << result.error << "\n";
    return result.exit_code;
}
