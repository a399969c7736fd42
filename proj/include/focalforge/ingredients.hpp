#pragma once

#include "focalforge/focal_context.hpp"
#include "focalforge/repo_miner.hpp"
#include "focalforge/stats.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

/// Distinct lexical tokens of a fragment without Java keywords, `true`/`false`/`null`,
/// separators and operators. Literal tokens keep their source spelling (quotes included).
using TokenBag = std::set<std::string>;

TokenBag code_tokens(std::string_view code);

/// Same filtering as code_tokens, keeping repetitions in source order.
std::vector<std::string> code_token_sequence(std::string_view code);

enum class OverlapMode {
    Set,       // distinct shared tokens
    Multiset,  // sum over shared tokens of min(occurrences in a, occurrences in b)
};

std::size_t shared_token_count(std::string_view a, std::string_view b, OverlapMode mode = OverlapMode::Set);
std::size_t shared_token_count(const ContextRendering& context, const MethodModel& test,
                               OverlapMode mode = OverlapMode::Set);

struct OverlapRow {
    ContextLevel level;
    std::string pair_id;
    std::size_t shared_tokens{0};
};

struct OverlapStats {
    std::vector<ContextLevel> levels;
    std::vector<OverlapRow> rows;  // level-major, pairs in input order
    std::map<ContextLevel, Summary> per_level;

    nlohmann::json to_json() const;
    /// Columns: level,pair_id,shared_tokens
    void write_csv(std::ostream& out) const;
};

struct OverlapOptions {
    std::size_t budget{kDefaultBudget};
    bool truncate{true};  // false measures the full rendering regardless of budget
    OverlapMode mode{OverlapMode::Set};
    int jobs{1};
};

OverlapStats overlap_distribution(const std::vector<MappedPair>& pairs, const std::vector<ContextLevel>& levels,
                                  const OverlapOptions& options = {});

}  // namespace focalforge
