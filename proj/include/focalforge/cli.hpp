#pragma once

#include "focalforge/corpus.hpp"
#include "focalforge/focal_context.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace focalforge::cli {

/// Settings shared by the subcommands; loaded from `--config` and overridden by flags.
struct PipelineConfig {
    std::size_t budget{kDefaultBudget};
    std::vector<ContextLevel> levels{std::begin(kAllLevels), std::end(kAllLevels)};
    SplitFractions fractions;
    std::uint64_t seed{42};
    std::optional<DedupMode> dedup{DedupMode::Whitespace};  // nullopt: no deduplication
    TokenStrategy token_strategy{TokenStrategy::Lexical};
    std::filesystem::path api_lists;
    std::filesystem::path runner;
    int jobs{1};

    /// Keys: budget, levels, fractions, seed, dedup (whitespace|raw|none),
    /// token_strategy, api_lists, runner, jobs.
    static PipelineConfig load(const std::filesystem::path& path);
    /// Throws ConfigError.
    void validate() const;
};

/// Runs one subcommand. Diagnostics go to `err` as a JSON object; `out` only
/// receives data with `--stdout` (and help text).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace focalforge::cli
