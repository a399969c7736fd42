#include "focalforge/corpus.hpp"

#include "focalforge/java_lexer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace focalforge {

std::optional<DedupMode> parse_dedup_mode(std::string_view s) {
    if (s == "whitespace") return DedupMode::Whitespace;
    if (s == "raw") return DedupMode::Raw;
    return std::nullopt;
}

std::string_view to_string(DedupMode mode) { return mode == DedupMode::Raw ? "raw" : "whitespace"; }

namespace {

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    bool pending = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            pending = !out.empty();
            continue;
        }
        if (pending) out += ' ';
        pending = false;
        out += c;
    }
    return out;
}

std::string dedup_key(const MappedPair& p, DedupMode mode) {
    std::string test = p.test_case.body_text;
    std::string focal = p.focal_method.body_text;
    if (mode == DedupMode::Whitespace) {
        test = collapse_whitespace(test);
        focal = collapse_whitespace(focal);
    }
    // Length prefix keeps the concatenation unambiguous.
    return std::to_string(test.size()) + ":" + test + focal;
}

// Uniform integer in [0, bound) by rejection, so the sequence does not depend on
// the standard library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

std::vector<MappedPair> deduplicate(const std::vector<MappedPair>& pairs, DedupMode mode) {
    std::unordered_set<std::string> seen;
    std::vector<MappedPair> out;
    for (const auto& p : pairs) {
        if (seen.insert(dedup_key(p, mode)).second) out.push_back(p);
    }
    return out;
}

SplitFractions parse_fractions(std::string_view s) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        auto item = s.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        double v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw std::invalid_argument("fraction '" + std::string(item) + "' is not a number");
        }
        if (v < 0 || !std::isfinite(v)) throw std::invalid_argument("fractions must be non-negative");
        values.push_back(v);
        pos = comma + 1;
    }
    if (values.size() != 3) {
        throw std::invalid_argument("3 fractions required (train,validation,test), got " + std::to_string(values.size()));
    }
    if (std::abs(values[0] + values[1] + values[2] - 1.0) > 1e-9) {
        throw std::invalid_argument("fractions must sum to 1");
    }
    return {values[0], values[1], values[2]};
}

std::array<double, 3> CorpusSplit::achieved() const {
    const double n = static_cast<double>(total());
    if (n == 0) return {0, 0, 0};
    return {train.size() / n, validation.size() / n, test.size() / n};
}

CorpusSplit split_by_repo(const std::vector<MappedPair>& pairs, const SplitFractions& fractions, std::uint64_t seed) {
    const auto target = fractions.as_array();
    if (std::abs(target[0] + target[1] + target[2] - 1.0) > 1e-9 ||
        std::any_of(target.begin(), target.end(), [](double f) { return f < 0; })) {
        throw SplitError("fractions must be non-negative and sum to 1");
    }

    std::map<std::string, std::size_t> counts;
    for (const auto& p : pairs) ++counts[p.repo_id];
    if (counts.size() < 3) {
        throw SplitError("need at least 3 repositories for a repo-disjoint 3-way split, got " +
                         std::to_string(counts.size()));
    }

    std::vector<std::pair<std::string, std::size_t>> repos(counts.begin(), counts.end());
    std::mt19937_64 rng(seed);
    for (std::size_t i = repos.size() - 1; i > 0; --i) {
        std::swap(repos[i], repos[bounded(rng, i + 1)]);
    }
    std::stable_sort(repos.begin(), repos.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

    const double total = static_cast<double>(pairs.size());
    std::array<double, 3> assigned{0, 0, 0};
    std::array<std::size_t, 3> repo_count{0, 0, 0};
    std::unordered_map<std::string, int> where;
    CorpusSplit split;
    split.fractions = fractions;

    for (std::size_t r = 0; r < repos.size(); ++r) {
        const std::size_t remaining = repos.size() - r;
        std::vector<int> empty;
        for (int s = 0; s < 3; ++s) {
            if (repo_count[s] == 0 && target[s] > 0) empty.push_back(s);
        }
        std::vector<int> eligible = empty;
        if (remaining > empty.size()) eligible = {0, 1, 2};
        int best = -1;
        double best_deficit = 0;
        for (int s : eligible) {
            if (target[s] == 0 && eligible.size() > 1) continue;
            const double deficit = target[s] * total - assigned[s];
            if (best < 0 || deficit > best_deficit) {
                best = s;
                best_deficit = deficit;
            }
        }
        assigned[best] += static_cast<double>(repos[r].second);
        ++repo_count[best];
        where[repos[r].first] = best;
        split.repos[best].push_back(repos[r].first);
    }

    std::array<std::vector<MappedPair>*, 3> out{&split.train, &split.validation, &split.test};
    for (const auto& p : pairs) out[where.at(p.repo_id)]->push_back(p);
    return split;
}

}  // namespace focalforge
