#pragma once

#include <string>
#include <vector>

struct CliResult {
    int exit_code = -1;
    std::string out;
};

// Runs the cleantri binary with the given arguments; stderr is discarded.
// `env` is prepended verbatim, e.g. "CLEANTRI_SIEVE_MEMORY=1K".
CliResult run_cli(const std::vector<std::string>& args, const std::string& env = {});
