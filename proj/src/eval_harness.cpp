#include "focalforge/eval_harness.hpp"

#include "focalforge/keyvalue.hpp"
#include "focalforge/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace focalforge {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(VerdictCategory c) {
    switch (c) {
        case VerdictCategory::SyntaxError: return "syntax_error";
        case VerdictCategory::BuildError: return "build_error";
        case VerdictCategory::FailingTest: return "failing_test";
        case VerdictCategory::PassingTest: return "passing_test";
    }
    return "syntax_error";
}

std::optional<VerdictCategory> parse_verdict_category(std::string_view s) {
    for (auto c : {VerdictCategory::SyntaxError, VerdictCategory::BuildError, VerdictCategory::FailingTest,
                   VerdictCategory::PassingTest}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

std::optional<ScaffoldProfile> parse_scaffold_profile(std::string_view s) {
    if (s == "junit4") return ScaffoldProfile::JUnit4;
    if (s == "junit5") return ScaffoldProfile::JUnit5;
    if (s == "mockito") return ScaffoldProfile::Mockito;
    if (s == "auto") return ScaffoldProfile::Auto;
    return std::nullopt;
}

std::string_view to_string(ScaffoldProfile p) {
    switch (p) {
        case ScaffoldProfile::JUnit4: return "junit4";
        case ScaffoldProfile::JUnit5: return "junit5";
        case ScaffoldProfile::Mockito: return "mockito";
        case ScaffoldProfile::Auto: return "auto";
    }
    return "auto";
}

namespace {

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        if (comma == std::string_view::npos) comma = s.size();
        auto item = s.substr(pos, comma - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        if (!item.empty()) out.emplace_back(item);
        pos = comma + 1;
    }
    return out;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path resolve(const fs::path& base, const std::string& value) {
    fs::path p(value);
    if (p.is_relative() && !base.empty()) p = base / p;
    return p.lexically_normal();
}

std::string sanitize(std::string_view id) {
    std::string out;
    for (char c : id) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') ? c : '_';
    if (out.empty() || out == "." || out == "..") out = "_" + out;
    return out;
}

bool mentions_mockito(const Candidate& c) {
    static const auto mockito = ApiCatalog::defaults().groups.at("mockito");
    try {
        auto m = candidate_method(c);
        for (const auto& name : m.invocations) {
            if (std::find(mockito.begin(), mockito.end(), name) != mockito.end()) return true;
        }
    } catch (const UnparseableCandidate&) {
    }
    return false;
}

std::string package_of(const Candidate& c, const RunnerConfig& cfg) {
    if (!cfg.package_name.empty()) return cfg.package_name;
    return c.focal ? c.focal->package_name : std::string();
}

fs::path fresh_temp_root() {
    static std::atomic<unsigned> counter{0};
    auto root = fs::temp_directory_path() /
                ("focalforge-eval-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(root);
    return root;
}

}  // namespace

RunnerConfig RunnerConfig::from_text(std::string_view text, const fs::path& base, const std::string& name) {
    auto kv = KeyValueFile::parse(text, name);
    static const char* known[] = {"compile_cmd", "test_cmd", "classpath", "timeout", "coverage_report",
                                  "profile", "package", "test_class", "imports", "scaffold_template",
                                  "scaffold_template_file", "work_root", "project_dir", "project"};
    for (const auto& [key, value] : kv.values()) {
        if (std::none_of(std::begin(known), std::end(known), [&](const char* k) { return key == k; })) {
            throw ConfigError(name + ": unknown key '" + key + "'");
        }
    }
    RunnerConfig cfg;
    cfg.compile_cmd = kv.get_or("compile_cmd", "");
    cfg.test_cmd = kv.get_or("test_cmd", "");
    cfg.classpath = kv.get_or("classpath", "");
    if (auto t = kv.get_number("timeout")) cfg.timeout = *t;
    cfg.coverage_report = kv.get_or("coverage_report", "");
    if (auto p = kv.get("profile")) {
        auto profile = parse_scaffold_profile(*p);
        if (!profile) throw ConfigError(name + ": unknown profile '" + *p + "' (junit4, junit5, mockito, auto)");
        cfg.profile = *profile;
    }
    cfg.package_name = kv.get_or("package", "");
    cfg.test_class = kv.get_or("test_class", cfg.test_class);
    if (auto i = kv.get("imports")) cfg.imports = split_list(*i);
    cfg.scaffold_template = kv.get_or("scaffold_template", "");
    if (auto f = kv.get("scaffold_template_file")) {
        if (!cfg.scaffold_template.empty()) {
            throw ConfigError(name + ": scaffold_template and scaffold_template_file are exclusive");
        }
        cfg.scaffold_template = read_file(resolve(base, *f));
    }
    if (auto w = kv.get("work_root")) cfg.work_root = resolve(base, *w);
    if (auto p = kv.get("project_dir")) cfg.project_dir = resolve(base, *p);
    cfg.project = kv.get_or("project", "");
    if (cfg.project.empty() && !cfg.project_dir.empty()) cfg.project = cfg.project_dir.filename().string();
    cfg.validate();
    return cfg;
}

RunnerConfig RunnerConfig::load(const fs::path& path) {
    return from_text(read_file(path), path.parent_path(), path.string());
}

void RunnerConfig::validate() const {
    if (compile_cmd.empty()) throw ConfigError("runner config: compile_cmd is required");
    if (test_cmd.empty()) throw ConfigError("runner config: test_cmd is required");
    if (compile_cmd.find("{class_file}") == std::string::npos) {
        throw ConfigError("runner config: compile_cmd must contain {class_file}");
    }
    if (test_cmd.find("{workdir}") == std::string::npos) {
        throw ConfigError("runner config: test_cmd must contain {workdir}");
    }
    if (!(timeout > 0)) throw ConfigError("runner config: timeout must be positive");
    if (test_class.empty()) throw ConfigError("runner config: test_class must not be empty");
    if (!scaffold_template.empty() && scaffold_template.find("{method}") == std::string::npos) {
        throw ConfigError("runner config: scaffold_template must contain {method}");
    }
}

std::vector<std::string> profile_imports(ScaffoldProfile profile, const Candidate& c) {
    if (profile == ScaffoldProfile::Auto) profile = mentions_mockito(c) ? ScaffoldProfile::Mockito : ScaffoldProfile::JUnit4;
    switch (profile) {
        case ScaffoldProfile::JUnit5:
            return {"org.junit.jupiter.api.Test", "static org.junit.jupiter.api.Assertions.*"};
        case ScaffoldProfile::Mockito:
            return {"org.junit.Test", "static org.junit.Assert.*", "static org.mockito.Mockito.*"};
        default:
            return {"org.junit.Test", "static org.junit.Assert.*"};
    }
}

std::string expand_placeholders(std::string_view tmpl, const std::map<std::string, std::string>& values) {
    std::string out;
    std::size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] == '{') {
            auto close = tmpl.find('}', i);
            if (close != std::string_view::npos) {
                auto it = values.find(std::string(tmpl.substr(i + 1, close - i - 1)));
                if (it != values.end()) {
                    out += it->second;
                    i = close + 1;
                    continue;
                }
            }
        }
        out += tmpl[i++];
    }
    return out;
}

std::string scaffold(const Candidate& c, const RunnerConfig& cfg) {
    const std::string package = package_of(c, cfg);
    std::vector<std::string> imports = profile_imports(cfg.profile, c);
    if (c.focal && c.focal->class_name.find('.') != std::string::npos && c.focal->package_name != package) {
        imports.push_back(c.focal->class_name);
    }
    for (const auto& i : cfg.imports) {
        if (std::find(imports.begin(), imports.end(), i) == imports.end()) imports.push_back(i);
    }
    std::string import_block;
    for (const auto& i : imports) import_block += "import " + i + ";\n";

    if (!cfg.scaffold_template.empty()) {
        return expand_placeholders(cfg.scaffold_template, {{"package", package.empty() ? "" : "package " + package + ";"},
                                                           {"imports", import_block},
                                                           {"class_name", cfg.test_class},
                                                           {"method", c.text}});
    }
    std::string out;
    if (!package.empty()) out += "package " + package + ";\n\n";
    out += import_block;
    out += "\npublic class " + cfg.test_class + " {\n\n";
    out += c.text;
    out += "\n\n}\n";
    return out;
}

CommandExecutor shell_executor() {
    return [](const std::string& command, const fs::path& workdir, double timeout) {
        return run_command(command, workdir, timeout);
    };
}

std::string focal_key(const Candidate& c) {
    if (!c.focal) return c.focal_pair_id;
    std::string key = c.focal->class_name + "#" + c.focal->method_name + "(";
    for (std::size_t i = 0; i < c.focal->parameter_types.size(); ++i) {
        if (i) key += ", ";
        key += simple_type_name(c.focal->parameter_types[i]);
    }
    return key + ")";
}

bool output_reports_failure(std::string_view output) {
    if (output.find("FAILURES!!!") != std::string_view::npos) return true;
    // Counts that follow a label (`Failures: 2`) or precede one (`[ 2 tests failed ]`).
    auto number_after = [&](std::size_t pos) {
        while (pos < output.size() && output[pos] == ' ') ++pos;
        std::size_t start = pos;
        while (pos < output.size() && std::isdigit(static_cast<unsigned char>(output[pos]))) ++pos;
        if (pos == start) return -1L;
        return std::stol(std::string(output.substr(start, pos - start)));
    };
    for (std::string_view label : {"Failures:", "Errors:"}) {
        for (auto pos = output.find(label); pos != std::string_view::npos; pos = output.find(label, pos + 1)) {
            if (number_after(pos + label.size()) > 0) return true;
        }
    }
    for (std::string_view label : {"tests failed", "test failed"}) {
        for (auto pos = output.find(label); pos != std::string_view::npos; pos = output.find(label, pos + 1)) {
            std::size_t end = pos;
            while (end > 0 && output[end - 1] == ' ') --end;
            std::size_t start = end;
            while (start > 0 && std::isdigit(static_cast<unsigned char>(output[start - 1]))) --start;
            if (start < end && std::stol(std::string(output.substr(start, end - start))) > 0) return true;
        }
    }
    return false;
}

Verdict classify_candidate(const Candidate& input, const RunnerConfig& cfg, const CommandExecutor& exec) {
    Verdict v;
    v.candidate_id = input.id;
    v.focal_pair_id = input.focal_pair_id;
    v.generator = input.generator;
    v.project = cfg.project;
    v.focal_key = focal_key(input);

    // Stage 1: syntax, with truncation repair.
    auto syntax = check_syntax(input);
    Candidate c = syntax.ok ? input : repair_truncation(input);
    if (!syntax.ok && !c.repaired) {
        v.category = VerdictCategory::SyntaxError;
        v.reason = syntax.diagnostic;
        return v;
    }
    v.repaired = !syntax.ok;
    try {
        candidate_method(c);
    } catch (const UnparseableCandidate& e) {
        v.category = VerdictCategory::SyntaxError;
        v.reason = e.what();
        return v;
    }

    // Stage 2: scaffold and compile.
    fs::path root = cfg.work_root.empty() ? fresh_temp_root() : cfg.work_root;
    fs::path workdir = fs::absolute(root / sanitize(input.id));
    std::error_code ec;
    fs::remove_all(workdir, ec);
    const std::string package = package_of(c, cfg);
    fs::path class_dir = workdir;
    if (!package.empty()) {
        std::string rel = package;
        std::replace(rel.begin(), rel.end(), '.', '/');
        class_dir /= rel;
    }
    fs::create_directories(class_dir);
    const fs::path class_file = class_dir / (cfg.test_class + ".java");
    {
        std::ofstream out(class_file, std::ios::binary | std::ios::trunc);
        out << scaffold(c, cfg);
        if (!out) throw std::runtime_error("cannot write " + class_file.string());
    }

    std::map<std::string, std::string> values{
        {"class_file", class_file.string()},
        {"workdir", workdir.string()},
        {"test_class", package.empty() ? cfg.test_class : package + "." + cfg.test_class},
        {"project", cfg.project_dir.empty() ? std::string() : fs::absolute(cfg.project_dir).string()},
        {"candidate_id", input.id},
    };
    values["classpath"] = expand_placeholders(cfg.classpath, values);

    ++v.commands_run;
    auto compiled = exec(expand_placeholders(cfg.compile_cmd, values), workdir, cfg.timeout);
    if (compiled.timed_out) {
        v.category = VerdictCategory::BuildError;
        v.reason = "compile timeout";
        return v;
    }
    if (compiled.exit_code != 0) {
        v.category = VerdictCategory::BuildError;
        v.reason = "compile exited with status " + std::to_string(compiled.exit_code);
        return v;
    }

    // Stage 3: run.
    ++v.commands_run;
    auto ran = exec(expand_placeholders(cfg.test_cmd, values), workdir, cfg.timeout);
    if (ran.timed_out) {
        v.category = VerdictCategory::FailingTest;
        v.reason = "timeout";
        return v;
    }
    if (ran.exit_code != 0) {
        v.category = VerdictCategory::FailingTest;
        v.reason = "test exited with status " + std::to_string(ran.exit_code);
        return v;
    }
    if (output_reports_failure(ran.output)) {
        v.category = VerdictCategory::FailingTest;
        v.reason = "test failure reported";
        return v;
    }

    // Stage 4: coverage of the focal method.
    v.category = VerdictCategory::PassingTest;
    if (cfg.coverage_report.empty()) {
        v.warnings.push_back("coverage not configured; correct=false");
        return v;
    }
    if (!c.focal) {
        v.warnings.push_back("no focal target for candidate; correct=false");
        return v;
    }
    fs::path report = expand_placeholders(cfg.coverage_report, values);
    if (report.is_relative()) report = workdir / report;
    if (!fs::exists(report)) {
        v.warnings.push_back("coverage report missing: " + report.string());
        return v;
    }
    try {
        auto records = parse_coverage_xml(report);
        auto matched = match_focal_coverage(records, *c.focal);
        if (matched.empty()) {
            v.warnings.push_back("focal method not found in coverage report");
            v.focal_lines_covered = 0;
            v.focal_conditions_covered = 0;
            return v;
        }
        std::size_t lines = 0, conditions = 0;
        for (const auto* r : matched) {
            lines += r->lines_covered;
            conditions += r->conditions_covered;
        }
        v.focal_lines_covered = lines;
        v.focal_conditions_covered = conditions;
        v.correct = lines > 0;
    } catch (const CoverageError& e) {
        v.warnings.push_back(std::string("coverage report unreadable: ") + e.what());
    }
    return v;
}

std::vector<Verdict> evaluate_candidates(const std::vector<Candidate>& candidates, const RunnerConfig& cfg, int jobs,
                                         const CommandExecutor& exec) {
    RunnerConfig shared = cfg;
    if (shared.work_root.empty()) shared.work_root = fresh_temp_root();
    std::vector<Verdict> out(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) { out[i] = classify_candidate(candidates[i], shared, exec); });
    return out;
}

void to_json(json& j, const Verdict& v) {
    j = json{{"candidate_id", v.candidate_id},
             {"focal_pair_id", v.focal_pair_id},
             {"generator", v.generator},
             {"project", v.project},
             {"focal_key", v.focal_key},
             {"category", to_string(v.category)},
             {"correct", v.correct},
             {"repaired", v.repaired},
             {"reason", v.reason},
             {"warnings", v.warnings},
             {"commands_run", v.commands_run}};
    j["focal_lines_covered"] = v.focal_lines_covered ? json(*v.focal_lines_covered) : json(nullptr);
    j["focal_conditions_covered"] = v.focal_conditions_covered ? json(*v.focal_conditions_covered) : json(nullptr);
}

void from_json(const json& j, Verdict& v) {
    v = Verdict{};
    j.at("candidate_id").get_to(v.candidate_id);
    auto cat = parse_verdict_category(j.at("category").get<std::string>());
    if (!cat) throw std::invalid_argument("unknown verdict category " + j.at("category").dump());
    v.category = *cat;
    j.at("correct").get_to(v.correct);
    auto opt = [&](const char* key, auto& out) {
        if (auto it = j.find(key); it != j.end() && !it->is_null()) it->get_to(out);
    };
    opt("focal_pair_id", v.focal_pair_id);
    opt("generator", v.generator);
    opt("project", v.project);
    opt("focal_key", v.focal_key);
    opt("repaired", v.repaired);
    opt("reason", v.reason);
    opt("warnings", v.warnings);
    opt("commands_run", v.commands_run);
    if (auto it = j.find("focal_lines_covered"); it != j.end() && !it->is_null()) v.focal_lines_covered = it->get<std::size_t>();
    if (auto it = j.find("focal_conditions_covered"); it != j.end() && !it->is_null()) {
        v.focal_conditions_covered = it->get<std::size_t>();
    }
}

void CategoryCounts::add(const Verdict& v) {
    if (v.correct && v.category != VerdictCategory::PassingTest) {
        throw std::logic_error("verdict " + v.candidate_id + " is correct but not a passing test");
    }
    switch (v.category) {
        case VerdictCategory::SyntaxError: ++syntax_error; break;
        case VerdictCategory::BuildError: ++build_error; break;
        case VerdictCategory::FailingTest: ++failing; break;
        case VerdictCategory::PassingTest: ++passing; break;
    }
    if (v.correct) ++correct;
}

EvaluationSummary aggregate(const std::vector<Verdict>& verdicts, const std::vector<std::string>& expected_methods) {
    EvaluationSummary s;
    std::map<std::pair<std::string, std::string>, MethodSummary> methods;
    for (const auto& v : verdicts) {
        auto& m = methods[{v.project, v.focal_key}];
        m.project = v.project;
        m.focal_key = v.focal_key;
        m.counts.add(v);
    }
    for (const auto& key : expected_methods) {
        bool seen = std::any_of(methods.begin(), methods.end(), [&](const auto& kv) { return kv.first.second == key; });
        if (!seen) s.warnings.push_back("focal method " + key + " has no candidates; excluded");
    }
    std::map<std::string, ProjectSummary> projects;
    s.overall.project = "Total";
    for (auto& [key, m] : methods) {
        auto& p = projects[m.project];
        p.project = m.project;
        for (auto* target : {&p, &s.overall}) {
            ++target->methods_total;
            if (m.tested()) ++target->methods_tested;
            target->counts.syntax_error += m.counts.syntax_error;
            target->counts.build_error += m.counts.build_error;
            target->counts.failing += m.counts.failing;
            target->counts.passing += m.counts.passing;
            target->counts.correct += m.counts.correct;
        }
        s.methods.push_back(std::move(m));
    }
    for (auto& [name, p] : projects) s.projects.push_back(std::move(p));
    return s;
}

namespace {

json counts_json(const CategoryCounts& c) {
    const double n = static_cast<double>(c.total());
    auto pct = [&](std::size_t k) { return n == 0 ? 0.0 : 100.0 * static_cast<double>(k) / n; };
    return json{{"total", c.total()},
                {"correct", c.correct},
                {"passing", c.passing},
                {"failing", c.failing},
                {"build_error", c.build_error},
                {"syntax_error", c.syntax_error},
                {"percent",
                 {{"correct", pct(c.correct)},
                  {"passing", pct(c.passing)},
                  {"failing", pct(c.failing)},
                  {"build_error", pct(c.build_error)},
                  {"syntax_error", pct(c.syntax_error)}}}};
}

json project_json(const ProjectSummary& p) {
    return json{{"project", p.project},
                {"methods_tested", p.methods_tested},
                {"methods_total", p.methods_total},
                {"candidates", counts_json(p.counts)}};
}

std::string cell(std::size_t k, std::size_t n) {
    std::ostringstream ss;
    ss << k << " (" << std::fixed << std::setprecision(2) << (n == 0 ? 0.0 : 100.0 * static_cast<double>(k) / n)
       << "%)";
    return ss.str();
}

}  // namespace

json EvaluationSummary::to_json() const {
    json projects_json = json::array();
    for (const auto& p : projects) projects_json.push_back(project_json(p));
    json methods_json = json::array();
    for (const auto& m : methods) {
        methods_json.push_back(
            {{"project", m.project}, {"focal_key", m.focal_key}, {"tested", m.tested()}, {"candidates", counts_json(m.counts)}});
    }
    return json{{"projects", projects_json}, {"overall", project_json(overall)}, {"methods", methods_json},
                {"warnings", warnings}};
}

std::string EvaluationSummary::table() const {
    std::ostringstream out;
    out << "| Project | Tested | Total | Correct | Passing | Failing | Build Error | Syntax Error | Total |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    auto row = [&](const ProjectSummary& p) {
        const auto n = p.counts.total();
        out << "| " << (p.project.empty() ? "-" : p.project) << " | " << p.methods_tested << " | " << p.methods_total
            << " | " << cell(p.counts.correct, n) << " | " << cell(p.counts.passing, n) << " | "
            << cell(p.counts.failing, n) << " | " << cell(p.counts.build_error, n) << " | "
            << cell(p.counts.syntax_error, n) << " | " << n << " |\n";
    };
    for (const auto& p : projects) row(p);
    row(overall);
    return out.str();
}

}  // namespace focalforge
