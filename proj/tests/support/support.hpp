#pragma once

// Oracles, generators and fixture loaders shared by the unit tests, the property
// tests and the acceptance binary. Nothing in here calls into the library's
// lexer or parser: the oracles must stay independent of the code they check.

#include "focalforge/eval_harness.hpp"
#include "focalforge/repo_miner.hpp"
#include "focalforge/validator.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace support {

std::filesystem::path fixture_dir();
std::filesystem::path fixture_repos();

nlohmann::json read_json(const std::filesystem::path& path);
std::vector<nlohmann::json> read_json_lines(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

/// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(std::string_view tag = "ff");
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

// ---- token oracle -----------------------------------------------------------

enum class OracleKind { Word, Keyword, Literal, Punct };

struct OracleToken {
    OracleKind kind;
    std::string text;
};

/// Character-level Java scanner written from the language rules: comments are
/// dropped, a run of `>` is split into single characters (`>=` stays whole).
std::vector<OracleToken> oracle_scan(std::string_view code);

/// Identifiers and literals other than true/false/null, in order.
std::vector<std::string> oracle_ingredients(std::string_view code);

/// Distinct ingredients, intersected by nested loops.
std::size_t oracle_shared(std::string_view a, std::string_view b);

/// Texts of every token.
std::vector<std::string> oracle_token_texts(std::string_view code);

/// Calls to names in `apis`: an identifier directly followed by `(`, not
/// preceded by `new` and not the declared method's own name.
std::map<std::string, std::size_t> oracle_api_calls(std::string_view method_text, const std::set<std::string>& apis);

// ---- fixture corpus ---------------------------------------------------------

/// Every pair mined from the fixture repositories, repo by repo in name order.
std::vector<focalforge::MappedPair> fixture_pairs();

struct LabeledPair {
    std::string repo, test_class, test_case, focal_class, focal_signature, class_match, method_match;
    auto operator<=>(const LabeledPair&) const = default;
};

std::vector<LabeledPair> labeled_pairs();
LabeledPair label_of(const focalforge::MappedPair& p);

/// Method texts that parse: fixture test cases plus the valid labeled candidates.
std::vector<std::string> valid_test_methods();

// ---- generators -------------------------------------------------------------

/// `repos` repositories with 1..max_pairs pairs each and distinct bodies.
std::vector<focalforge::MappedPair> random_corpus(std::mt19937_64& rng, std::size_t repos, std::size_t max_pairs);

/// A syntactically valid JUnit test method built from a small statement grammar:
/// nested blocks, lambdas, anonymous classes, array initializers, and literals
/// and comments holding `;`, `{` and `}`.
std::string random_test_method(std::mt19937_64& rng);

/// Truncates `text` at a uniformly random point strictly inside the method body.
std::string truncate_inside_body(const std::string& text, std::mt19937_64& rng);

// ---- scripted runner --------------------------------------------------------

/// What the stub toolchain does for one candidate.
struct Script {
    enum class Step { Ok, Fail, Timeout };
    Step compile{Step::Ok};
    Step test{Step::Ok};
    bool failure_in_output{false};  // exit 0 but the runner prints a failure summary
    enum class Coverage { None, FocalHit, FocalZero, OtherMethod };
    Coverage coverage{Coverage::FocalHit};
};

/// Executor that looks the candidate id up in `scripts` (the command ends with
/// it) and plays the script back. Coverage files are written to the working
/// directory on test runs. Invocation counts per candidate are recorded.
class ScriptedToolchain {
public:
    explicit ScriptedToolchain(std::map<std::string, Script> scripts) : scripts_(std::move(scripts)) {}

    focalforge::CommandExecutor executor();
    std::size_t calls(const std::string& id) const;

    /// Runner whose commands end with `{candidate_id}`.
    static focalforge::RunnerConfig runner(const std::filesystem::path& work_root);

private:
    std::map<std::string, Script> scripts_;
    mutable std::mutex mutex_;
    std::map<std::string, std::size_t> calls_;
};

/// Cobertura-style report for `focal` with the given number of hit lines.
std::string coverage_xml(const focalforge::FocalRef& focal, std::size_t hit_lines, bool include_focal);

/// Category the pipeline rules assign under `script`, given whether the text parses after repair.
focalforge::VerdictCategory expected_category(bool parses, const Script& s);

}  // namespace support
