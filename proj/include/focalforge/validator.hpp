#pragma once

#include "focalforge/code_model.hpp"
#include "focalforge/repo_miner.hpp"
#include "focalforge/stats.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

/// What a candidate is supposed to test.
struct FocalRef {
    std::string class_name;  // qualified when known
    std::string package_name;
    std::string method_name;
    std::vector<std::string> parameter_types;  // as written in source

    static FocalRef from(const MappedPair& pair);
    bool operator==(const FocalRef&) const = default;
};

struct Candidate {
    std::string id;
    std::string focal_pair_id;
    std::string text;
    std::string generator;
    bool repaired{false};
    std::optional<FocalRef> focal;  // inline alternative to looking up focal_pair_id

    bool operator==(const Candidate&) const = default;
};

void to_json(nlohmann::json& j, const FocalRef& f);
void from_json(const nlohmann::json& j, FocalRef& f);
void to_json(nlohmann::json& j, const Candidate& c);
void from_json(const nlohmann::json& j, Candidate& c);

/// Fills in `focal` from `pairs` (keyed by pair_id) where it is missing.
/// Returns the ids of candidates left without a focal target.
std::vector<std::string> resolve_focal(std::vector<Candidate>& candidates, const std::vector<MappedPair>& pairs);

struct SyntaxCheck {
    bool ok{false};
    std::string diagnostic;  // first diagnostic when !ok
};

/// `class __W { <text> }` must parse as Java.
SyntaxCheck check_syntax(const Candidate& c);
SyntaxCheck check_syntax(std::string_view text);

/// Drops everything after the last statement terminator (`;` or `}` outside
/// parentheses, inside the method body) and closes the open braces. Earlier cut
/// points are tried when the latest one does not parse. Returns the candidate
/// unchanged when it already parses or when no cut parses.
Candidate repair_truncation(const Candidate& c);

class UnparseableCandidate : public std::runtime_error {
public:
    UnparseableCandidate(const std::string& id, const std::string& why)
        : std::runtime_error("candidate " + id + " does not parse: " + why) {}
};

/// The candidate's first method declaration. Throws UnparseableCandidate.
MethodModel candidate_method(const Candidate& c);

bool has_test_annotation(const Candidate& c);
/// True iff the focal method's simple name is among the candidate's invocations.
bool invokes_focal_method(const Candidate& c, std::string_view focal_method_name);

/// Named groups of testing-API method names.
struct ApiCatalog {
    std::map<std::string, std::vector<std::string>> groups;

    static ApiCatalog defaults();
    /// `{"junit": ["assertEquals", ...], "mockito": [...], ...}`
    static ApiCatalog from_json(const nlohmann::json& j);
    static ApiCatalog load(const std::filesystem::path& path);

    /// Group of `name`, or nullopt.
    std::optional<std::string> group_of(std::string_view name) const;
};

struct ApiProfile {
    std::map<std::string, std::size_t> counts;  // non-zero entries only
    std::size_t total{0};

    std::size_t count(std::string_view api) const;
    bool operator==(const ApiProfile&) const = default;
};

void to_json(nlohmann::json& j, const ApiProfile& p);

ApiProfile api_profile(const MethodModel& method, const ApiCatalog& catalog = ApiCatalog::defaults());
/// Throws UnparseableCandidate.
ApiProfile api_profile(const Candidate& c, const ApiCatalog& catalog = ApiCatalog::defaults());

struct PopulationProfile {
    std::string label;
    std::size_t candidates{0};
    std::map<std::string, std::size_t> api_totals;
    std::map<std::string, std::size_t> group_totals;
    Summary per_candidate;  // distribution of per-candidate totals
};

struct ProfileComparison {
    PopulationProfile a;
    PopulationProfile b;

    nlohmann::json to_json() const;
};

PopulationProfile summarize_profiles(const std::string& label, const std::vector<ApiProfile>& profiles,
                                     const ApiCatalog& catalog = ApiCatalog::defaults());
ProfileComparison compare_profiles(const std::vector<ApiProfile>& a, const std::vector<ApiProfile>& b,
                                   const ApiCatalog& catalog = ApiCatalog::defaults(),
                                   const std::string& label_a = "a", const std::string& label_b = "b");

/// One line of `validate` output.
struct ValidationRecord {
    std::string id;
    std::string focal_pair_id;
    std::string generator;
    bool syntax_ok{false};           // after repair
    bool original_syntax_ok{false};  // before repair
    bool repaired{false};
    std::string diagnostic;
    std::string text;  // repaired text when repaired
    std::optional<bool> has_test_annotation;
    std::optional<bool> invokes_focal_method;  // empty when the focal target is unknown
    std::optional<ApiProfile> api;
};

void to_json(nlohmann::json& j, const ValidationRecord& r);

ValidationRecord validate_candidate(const Candidate& c, const ApiCatalog& catalog = ApiCatalog::defaults());

}  // namespace focalforge
