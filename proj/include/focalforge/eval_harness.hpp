#pragma once

#include "focalforge/coverage.hpp"
#include "focalforge/process.hpp"
#include "focalforge/validator.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

enum class VerdictCategory { SyntaxError, BuildError, FailingTest, PassingTest };

std::string_view to_string(VerdictCategory c);
std::optional<VerdictCategory> parse_verdict_category(std::string_view s);

enum class ScaffoldProfile { JUnit4, JUnit5, Mockito, Auto };

std::optional<ScaffoldProfile> parse_scaffold_profile(std::string_view s);
std::string_view to_string(ScaffoldProfile p);

/// How to build and run one scaffolded candidate. Command templates are run by
/// `/bin/sh -c` inside the candidate's working directory after substituting
/// {class_file}, {classpath}, {workdir}, {test_class}, {project} and {candidate_id}.
struct RunnerConfig {
    std::string compile_cmd;  // must mention {class_file}
    std::string test_cmd;     // must mention {workdir}
    std::string classpath;
    double timeout{60};  // seconds, per command
    // Path of the coverage report a passing run leaves behind, relative to the
    // working directory (placeholders allowed). Empty: coverage is not collected.
    std::string coverage_report;
    ScaffoldProfile profile{ScaffoldProfile::Auto};
    std::string package_name;  // empty: the focal class's package
    std::string test_class{"GeneratedTest"};
    std::vector<std::string> imports;  // extra imports, `static` allowed as prefix
    // Placeholders {package}, {imports}, {class_name}, {method}. Empty: built-in wrapper.
    std::string scaffold_template;
    std::filesystem::path work_root;    // empty: a fresh directory under the system temp dir
    std::filesystem::path project_dir;  // substituted for {project}
    std::string project;                // label in summaries; defaults to project_dir's name

    /// Keys: compile_cmd, test_cmd, classpath, timeout, coverage_report, profile,
    /// package, test_class, imports (comma-separated), scaffold_template,
    /// scaffold_template_file, work_root, project_dir, project. Relative paths resolve
    /// against the directory holding the file.
    static RunnerConfig load(const std::filesystem::path& path);
    static RunnerConfig from_text(std::string_view text, const std::filesystem::path& base = {},
                                  const std::string& name = "<runner>");

    /// Throws ConfigError naming the first problem.
    void validate() const;
};

/// Compilable test-class source with the candidate method embedded verbatim.
std::string scaffold(const Candidate& c, const RunnerConfig& cfg);

/// Imports the scaffold adds for `profile` (Auto resolved against the candidate).
std::vector<std::string> profile_imports(ScaffoldProfile profile, const Candidate& c);

/// Substitutes `{name}` placeholders; unknown ones are left as they are.
std::string expand_placeholders(std::string_view tmpl, const std::map<std::string, std::string>& values);

using CommandExecutor =
    std::function<CommandResult(const std::string& command, const std::filesystem::path& workdir, double timeout)>;

/// run_command with the default output cap.
CommandExecutor shell_executor();

struct Verdict {
    std::string candidate_id;
    std::string focal_pair_id;
    std::string generator;
    std::string project;
    std::string focal_key;  // class#method(types): groups candidates of one focal method
    VerdictCategory category{VerdictCategory::SyntaxError};
    bool correct{false};  // only ever true for PassingTest
    bool repaired{false};
    std::string reason;
    std::vector<std::string> warnings;
    std::size_t commands_run{0};
    std::optional<std::size_t> focal_lines_covered;
    std::optional<std::size_t> focal_conditions_covered;

    bool operator==(const Verdict&) const = default;
};

void to_json(nlohmann::json& j, const Verdict& v);
void from_json(const nlohmann::json& j, Verdict& v);

/// `pkg.Cls#method(int, String)`; falls back to the pair id without a focal target.
std::string focal_key(const Candidate& c);

/// Syntax check (with truncation repair), compile, run, then coverage. Stops at
/// the first failing stage; a syntax error never reaches the executor.
Verdict classify_candidate(const Candidate& c, const RunnerConfig& cfg, const CommandExecutor& exec = shell_executor());

/// Classifies every candidate on up to `jobs` threads; output order matches input.
std::vector<Verdict> evaluate_candidates(const std::vector<Candidate>& candidates, const RunnerConfig& cfg, int jobs,
                                         const CommandExecutor& exec = shell_executor());

/// True when the output of a test run reports a failing test.
bool output_reports_failure(std::string_view output);

struct CategoryCounts {
    std::size_t syntax_error{0};
    std::size_t build_error{0};
    std::size_t failing{0};
    std::size_t passing{0};
    std::size_t correct{0};

    std::size_t total() const { return syntax_error + build_error + failing + passing; }
    void add(const Verdict& v);
};

struct MethodSummary {
    std::string project;
    std::string focal_key;
    CategoryCounts counts;
    bool tested() const { return counts.correct > 0; }
};

struct ProjectSummary {
    std::string project;
    std::size_t methods_total{0};
    std::size_t methods_tested{0};
    CategoryCounts counts;
};

struct EvaluationSummary {
    std::vector<ProjectSummary> projects;  // by project name
    std::vector<MethodSummary> methods;    // by (project, focal_key)
    ProjectSummary overall;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
    /// Project | Tested | Total | Correct | Passing | Failing | Build Error | Syntax Error | Total
    std::string table() const;
};

/// Groups verdicts by focal method. Methods named in `expected_methods` that have
/// no verdicts are left out of the totals and reported as warnings.
EvaluationSummary aggregate(const std::vector<Verdict>& verdicts, const std::vector<std::string>& expected_methods = {});

}  // namespace focalforge
