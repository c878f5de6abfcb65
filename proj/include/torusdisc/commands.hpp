#ifndef TORUSDISC_COMMANDS_HPP
#define TORUSDISC_COMMANDS_HPP

#include "torusdisc/config.hpp"

#include <cstdint>
#include <string>

namespace torusdisc {

struct RunOptions {
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::uint64_t budget = 1u << 20;
    std::string format = "json"; // "json" | "csv"
};

// exit codes per the CLI contract
enum : int {
    kExitOk = 0,
    kExitVerificationFailure = 1,
    kExitConfigError = 2,
    kExitResourceCap = 3,
};

struct CommandResult {
    std::string output; // report for stdout / --out
    std::string diagnostics; // stderr side channel
    int exit_code = kExitOk;
};

CommandResult cmd_delta(const Config& cfg, const RunOptions& opts);
CommandResult cmd_disc(const Config& cfg, const RunOptions& opts);
CommandResult cmd_verify_thm51(const Config& cfg, const RunOptions& opts);
CommandResult cmd_classify(unsigned N, const RunOptions& opts);
CommandResult cmd_eyext(const Config& cfg, const RunOptions& opts);

// CSV row round-trip helpers (header-checked parse of our own output)
std::vector<std::vector<std::string>> parse_csv(const std::string& text);
std::string emit_csv(const std::vector<std::vector<std::string>>& rows);

} // namespace torusdisc

#endif
