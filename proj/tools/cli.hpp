#pragma once

#include "transversal/io.hpp"

#include <string>
#include <vector>

namespace transversal::cli {

enum ExitCode : int { found = 0, not_found = 1, invalid_input = 2, resource_limit = 3 };

struct Outcome {
    io::Json envelope;  // {"status", "payload", "diagnostics"}; null when `text` is set
    int exit_code = found;
    std::string text;   // help or version text, printed instead of an envelope
};

/// Runs one command line (without the program name) and never throws.
Outcome run(const std::vector<std::string>& args);

} // namespace transversal::cli
