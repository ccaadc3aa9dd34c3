#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    const auto outcome = transversal::cli::run(std::vector<std::string>(argv + 1, argv + argc));
    if (!outcome.text.empty()) {
        std::cout << outcome.text;
        return outcome.exit_code;
    }
    std::cout << outcome.envelope.dump(2) << '\n';
    const auto& diagnostics = outcome.envelope["diagnostics"];
    if (diagnostics.is_string() && !diagnostics.get<std::string>().empty()) {
        std::cerr << diagnostics.get<std::string>() << '\n';
    }
    return outcome.exit_code;
}
