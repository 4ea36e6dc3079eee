#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace binv {

// Configuration shared by the heavier subcommands.
struct Config {
    int max_degree = 14;
    std::string mode = "desk";  // desk | full
    std::vector<std::uint64_t> primes;  // empty = built-in defaults
    int jobs = 1;
    std::uint64_t seed = 2026;
    std::string out;         // output path; empty = stdout
    std::string resume;      // checkpoint directory to resume from
    std::string checkpoint;  // checkpoint directory to write
};

// Throws std::invalid_argument when an invariant is violated: jobs >= 1,
// max_degree >= 2, primes distinct and each larger than 2^31.
void validate_config(const Config& c);

// Full dispatcher behind the binary: parses `args` (without the program
// name), runs the subcommand, writes artifacts.  Returns the process exit
// code: 0 success, 1 failed verification, 2 usage/config/input error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binv
