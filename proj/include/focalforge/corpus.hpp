#pragma once

#include "focalforge/repo_miner.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

enum class DedupMode {
    Whitespace,  // compare whitespace-collapsed text
    Raw,         // compare bodies byte for byte
};

std::optional<DedupMode> parse_dedup_mode(std::string_view s);
std::string_view to_string(DedupMode mode);

/// Keeps the first pair for each (test body, focal body) key; order is preserved.
std::vector<MappedPair> deduplicate(const std::vector<MappedPair>& pairs, DedupMode mode = DedupMode::Whitespace);

struct SplitFractions {
    double train{0.8};
    double validation{0.1};
    double test{0.1};

    std::array<double, 3> as_array() const { return {train, validation, test}; }
};

/// Parses `a,b,c`; exactly three non-negative values summing to 1 within 1e-9.
SplitFractions parse_fractions(std::string_view s);

class SplitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CorpusSplit {
    std::vector<MappedPair> train;
    std::vector<MappedPair> validation;
    std::vector<MappedPair> test;
    SplitFractions fractions;
    // Repositories per split, in assignment order.
    std::array<std::vector<std::string>, 3> repos;

    std::size_t total() const { return train.size() + validation.size() + test.size(); }
    /// Achieved pair fractions.
    std::array<double, 3> achieved() const;
};

inline constexpr std::array<std::string_view, 3> kSplitNames = {"train", "validation", "test"};

/// Seeded shuffle of the repositories, then each repository (largest first, ties in
/// shuffled order) goes to the split furthest below its pair-count target. Splits
/// never share a repository. Throws SplitError with fewer than 3 repositories.
CorpusSplit split_by_repo(const std::vector<MappedPair>& pairs, const SplitFractions& fractions, std::uint64_t seed);

}  // namespace focalforge
