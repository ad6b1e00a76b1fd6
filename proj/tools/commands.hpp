#pragma once

#include "report.hpp"

#include <string>
#include <vector>

namespace frey::cli {

struct Config {
    long sunit_height = 10;
    long search_height = 100;
    Int disc_ceiling = 1000000;
    long prune_modulus = 97;
    int jobs = 1;
};

struct CommandResult {
    int exit_code = 0;
    Json report;      // empty for usage errors
    std::string error; // diagnostic for nonzero exits
};

/// Exit codes: 0 ran with a satisfied/expected result, 1 ran with verdict
/// Failed, 2 usage or input error, 3 unsupported field / attestation needed.
CommandResult run_command(const std::vector<std::string>& args);

} // namespace frey::cli
