#pragma once

#include <filesystem>
#include <string>

namespace focalforge {

struct CommandResult {
    int exit_code{0};  // 128 + signal when the process was killed by a signal
    bool timed_out{false};
    std::string output;  // stdout and stderr interleaved
};

/// Runs `command` through `/bin/sh -c` in `workdir` in its own process group.
/// After `timeout_seconds` (when > 0) the whole group is killed and the result
/// is flagged timed_out. Output beyond `max_output` bytes is discarded.
CommandResult run_command(const std::string& command, const std::filesystem::path& workdir, double timeout_seconds,
                          std::size_t max_output = 1 << 20);

}  // namespace focalforge
