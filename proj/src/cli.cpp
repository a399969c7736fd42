#include "focalforge/cli.hpp"

#include "focalforge/corpus.hpp"
#include "focalforge/coverage.hpp"
#include "focalforge/eval_harness.hpp"
#include "focalforge/focal_context.hpp"
#include "focalforge/ingredients.hpp"
#include "focalforge/jsonl.hpp"
#include "focalforge/keyvalue.hpp"
#include "focalforge/parallel.hpp"
#include "focalforge/repo_miner.hpp"
#include "focalforge/serialization.hpp"
#include "focalforge/validator.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace focalforge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr const char* kPairSchema = R"(Pair records (JSON Lines, one object per line):
  {schema_version: 1, pair_id, repo_id, test_class_path, test_class,
   test_case: {name, signature, header, return_type, parameters[{type,name}], body,
               span[begin,end], annotations[], invocations[], invocation_arity[],
               modifiers[], is_constructor},
   focal_class_path,
   focal_class: {name, qualified_name, package, kind,
                 methods[{name, signature, header, modifiers[], is_constructor}],
                 fields[{name, declared_type, modifiers[], annotations[]}]},
   focal_method: {same fields as test_case},
   class_match: "path"|"name", method_match: "name"|"unique_call",
   context: {level, text, token_count, truncated}   (render output only)})";

constexpr const char* kCandidateSchema = R"(Candidate records (JSON Lines):
  {schema_version: 1, id, focal_pair_id, text, generator,
   focal: {class, package, method, parameter_types[]}   (optional, overrides the pair lookup)})";

constexpr const char* kValidationSchema = R"(Validation records (JSON Lines):
  {schema_version: 1, id, focal_pair_id, generator, syntax_ok, original_syntax_ok, repaired,
   diagnostic, text, has_test_annotation, invokes_focal_method, api: {counts{}, total}})";

constexpr const char* kVerdictSchema = R"(Verdict records (JSON Lines):
  {schema_version: 1, candidate_id, focal_pair_id, generator, project, focal_key,
   category: "syntax_error"|"build_error"|"failing_test"|"passing_test", correct, repaired,
   reason, warnings[], commands_run, focal_lines_covered, focal_conditions_covered})";

constexpr const char* kRunnerDoc = R"(Runner config (key = value):
  compile_cmd = "javac -cp {classpath} -d {workdir} {class_file}"    (needs {class_file})
  test_cmd = "java -cp {classpath}:{workdir} org.junit.runner.JUnitCore {test_class}"  (needs {workdir})
  classpath, timeout (seconds), coverage_report (relative to {workdir}),
  profile = junit4|junit5|mockito|auto, package, test_class, imports (comma list),
  scaffold_template / scaffold_template_file ({package} {imports} {class_name} {method}),
  work_root, project_dir, project)";

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

std::vector<MappedPair> read_pairs(const fs::path& path) {
    if (!fs::exists(path)) throw std::runtime_error("cannot open " + path.string());
    return read_jsonl<MappedPair>(path);
}

std::vector<Candidate> read_candidates(const fs::path& path) {
    if (!fs::exists(path)) throw std::runtime_error("cannot open " + path.string());
    return read_jsonl<Candidate>(path);
}

void warn(std::ostream& err, const std::string& message) { err << json{{"warning", message}}.dump() << '\n'; }

struct Global {
    std::string config;
    int jobs{0};
    bool to_stdout{false};
};

// Primary JSON Lines output: --stdout wins, otherwise --out is mandatory.
void emit_jsonl(const std::vector<json>& values, const std::string& out_path, const Global& g, std::ostream& out) {
    if (g.to_stdout) {
        write_jsonl_values(out, values);
        return;
    }
    if (out_path.empty()) throw UsageError("--out is required (or pass --stdout)");
    write_jsonl_values(fs::path(out_path), values);
}

std::uint64_t parse_seed(const std::string& s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("seed must be a non-negative integer");
    return v;
}

std::optional<DedupMode> parse_dedup_setting(const std::string& s) {
    if (s == "none") return std::nullopt;
    auto m = parse_dedup_mode(s);
    if (!m) throw UsageError("dedup must be whitespace, raw or none");
    return m;
}

}  // namespace

PipelineConfig PipelineConfig::load(const fs::path& path) {
    auto kv = KeyValueFile::load(path);
    static const std::set<std::string> known = {"budget", "levels", "fractions", "seed", "dedup",
                                                "token_strategy", "api_lists", "runner", "jobs"};
    for (const auto& [k, v] : kv.values()) {
        if (!known.count(k)) throw ConfigError(path.string() + ": unknown key '" + k + "'");
    }
    const fs::path base = path.parent_path();
    auto resolve = [&](const std::string& v) {
        fs::path p(v);
        return (p.is_relative() ? base / p : p).lexically_normal();
    };
    PipelineConfig c;
    try {
        if (auto b = kv.get_number("budget")) {
            if (*b < 1 || *b != static_cast<double>(static_cast<std::size_t>(*b))) throw ConfigError("budget must be a positive integer");
            c.budget = static_cast<std::size_t>(*b);
        }
        if (auto l = kv.get("levels")) c.levels = parse_level_list(*l);
        if (auto f = kv.get("fractions")) c.fractions = parse_fractions(*f);
        if (auto s = kv.get("seed")) c.seed = parse_seed(*s);
        if (auto d = kv.get("dedup")) c.dedup = parse_dedup_setting(*d);
        if (auto t = kv.get("token_strategy")) {
            auto ts = parse_token_strategy(*t);
            if (!ts) throw ConfigError("token_strategy must be lexical or whitespace");
            c.token_strategy = *ts;
        }
        if (auto a = kv.get("api_lists")) c.api_lists = resolve(*a);
        if (auto r = kv.get("runner")) c.runner = resolve(*r);
        if (auto j = kv.get_number("jobs")) c.jobs = static_cast<int>(*j);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    c.validate();
    return c;
}

void PipelineConfig::validate() const {
    if (budget < 1) throw ConfigError("budget must be at least 1");
    const auto f = fractions.as_array();
    if (std::abs(f[0] + f[1] + f[2] - 1.0) > 1e-9) throw ConfigError("fractions must sum to 1");
    if (jobs < 1) throw ConfigError("jobs must be at least 1");
    if (levels.empty()) throw ConfigError("levels must not be empty");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mine test-to-focal-method pairs from Java repositories, build focal-context corpora, "
                 "and validate or evaluate generated test cases.",
                 "focalforge"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Global g;
    app.add_option("--config", g.config, "Pipeline config file (key = value)");
    app.add_option("--jobs", g.jobs, "Parallel job limit (overrides FOCALFORGE_JOBS and the config)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--stdout", g.to_stdout, "Write the primary output to stdout instead of --out");
    app.footer(R"(Config file keys: budget, levels, fractions, seed, dedup, token_strategy, api_lists, runner, jobs.
FOCALFORGE_JOBS sets the job limit unless --jobs is given.)");

    // mine
    std::vector<std::string> mine_roots;
    std::string mine_out, mine_report, mine_repo_id;
    bool mine_repos = false;
    auto* mine = app.add_subcommand("mine", "Map test cases to focal methods in one or more repositories");
    mine->add_option("roots", mine_roots, "Repository directories")->required()->check(CLI::ExistingDirectory);
    mine->add_flag("--repos", mine_repos, "Treat each immediate subdirectory of a root as its own repository");
    mine->add_option("--repo-id", mine_repo_id, "Repository id (single root; default: directory name)");
    mine->add_option("--out", mine_out, "Pairs output (JSON Lines)");
    mine->add_option("--report", mine_report, "Mining report (JSON)");
    mine->footer(std::string("Writes:\n") + kPairSchema +
                 "\nReport: {files_seen, files_parsed, parse_failures, classes, test_classes, test_cases,\n"
                 "         pairs_mapped, discards{reason: count}, failures[{path, reason}]}");

    // render
    std::string render_pairs, render_out, render_level, render_strategy;
    std::size_t render_budget = 0;
    auto* render = app.add_subcommand("render", "Attach focal-context renderings to pairs");
    render->add_option("--pairs", render_pairs, "Pairs input (JSON Lines)")->required();
    render->add_option("--out", render_out, "Output (JSON Lines): one record per pair and level");
    render->add_option("--level,--levels", render_level,
                       "fm, fm+fc, fm+fc+c, fm+fc+c+m, fm+fc+c+m+f, a comma list, or all (default: config)");
    render->add_option("--budget", render_budget, "Token budget (default 1024)")->check(CLI::PositiveNumber);
    render->add_option("--token-strategy", render_strategy, "lexical (default) or whitespace");
    render->footer(std::string("Reads and writes:\n") + kPairSchema);

    // split
    std::string split_pairs, split_out_dir, split_fractions, split_seed, split_dedup;
    auto* split = app.add_subcommand("split", "Deduplicate pairs and split them by repository");
    split->add_option("--pairs", split_pairs, "Pairs input (JSON Lines)")->required();
    split->add_option("--out-dir", split_out_dir, "Directory for train/validation/test.jsonl and split_report.json");
    split->add_option("--fractions", split_fractions, "train,validation,test (default 0.8,0.1,0.1)");
    split->add_option("--seed", split_seed, "Shuffle seed (default 42)");
    split->add_option("--dedup", split_dedup, "whitespace (default), raw or none");
    split->footer(std::string("Reads and writes:\n") + kPairSchema +
                  "\nsplit_report.json: {seed, fractions{}, dedup, input_pairs, unique_pairs,\n"
                  "                    splits{name: {pairs, repos[], fraction}}}");

    // analyze
    std::string analyze_pairs, analyze_out, analyze_csv, analyze_levels, analyze_overlap;
    std::size_t analyze_budget = 0;
    bool analyze_full = false;
    auto* analyze = app.add_subcommand("analyze", "Token overlap between focal contexts and test cases");
    analyze->add_option("--pairs", analyze_pairs, "Pairs input (JSON Lines)")->required();
    analyze->add_option("--levels", analyze_levels, "Level list or all (default: config)");
    analyze->add_option("--out", analyze_out, "Statistics (JSON)");
    analyze->add_option("--csv", analyze_csv, "Per-pair distribution (CSV: level,pair_id,shared_tokens)");
    analyze->add_option("--budget", analyze_budget, "Token budget for the renderings")->check(CLI::PositiveNumber);
    analyze->add_flag("--full", analyze_full, "Measure untruncated renderings");
    analyze->add_option("--overlap", analyze_overlap, "set (default) or multiset");
    analyze->footer(std::string("Reads:\n") + kPairSchema +
                    "\nWrites stats: {levels[], per_level{level: {n, min, q1, median, mean, q3, max, histogram{}}},\n"
                    "               options{}}");

    // validate
    std::string validate_candidates, validate_pairs, validate_out, validate_profile, validate_api;
    auto* validate = app.add_subcommand("validate", "Static quality checks on candidate test cases");
    validate->add_option("--candidates", validate_candidates, "Candidates (JSON Lines)")->required();
    validate->add_option("--pairs", validate_pairs, "Pairs the candidates refer to (JSON Lines)");
    validate->add_option("--out", validate_out, "Validation records (JSON Lines)");
    validate->add_option("--profile", validate_profile, "Testing-API profile comparison (JSON)");
    validate->add_option("--api-lists", validate_api, "Testing-API name lists (JSON object of arrays)");
    validate->footer(std::string("Reads:\n") + kCandidateSchema + "\nWrites:\n" + kValidationSchema +
                     "\nProfile: {populations[{label, candidates, api_totals{}, group_totals{}, per_candidate{}}]}");

    // evaluate
    std::string eval_candidates, eval_project, eval_runner, eval_out, eval_summary, eval_pairs, eval_table, eval_work;
    auto* evaluate = app.add_subcommand("evaluate", "Compile, run and classify candidate test cases");
    evaluate->add_option("--candidates", eval_candidates, "Candidates (JSON Lines)")->required();
    evaluate->add_option("--project", eval_project, "Project directory ({project} in command templates)");
    evaluate->add_option("--runner", eval_runner, "Runner config (default: config key runner)");
    evaluate->add_option("--out", eval_out, "Verdicts (JSON Lines)");
    evaluate->add_option("--summary", eval_summary, "Summary (JSON)");
    evaluate->add_option("--table", eval_table, "Summary table (Markdown)");
    evaluate->add_option("--pairs", eval_pairs, "Pairs giving each candidate's focal method");
    evaluate->add_option("--work-dir", eval_work, "Root for per-candidate working directories");
    evaluate->footer(std::string("Reads:\n") + kCandidateSchema + "\n" + kRunnerDoc + "\nWrites:\n" + kVerdictSchema);

    // report
    std::string report_verdicts, report_summary, report_table, report_methods;
    auto* report = app.add_subcommand("report", "Aggregate verdicts per focal method and project");
    report->add_option("--verdicts", report_verdicts, "Verdicts (JSON Lines)")->required();
    report->add_option("--summary", report_summary, "Summary (JSON)");
    report->add_option("--table", report_table, "Summary table (Markdown)");
    report->add_option("--methods", report_methods, "Expected focal keys, one per line");
    report->footer(std::string("Reads:\n") + kVerdictSchema);

    auto fail = [&](const std::string& kind, const std::string& message, int code) {
        err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
        return code;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 2);
    }

    try {
        PipelineConfig cfg;
        if (!g.config.empty()) cfg = PipelineConfig::load(g.config);
        int jobs = jobs_from_environment(cfg.jobs);
        if (g.jobs > 0) jobs = g.jobs;

        if (mine->parsed()) {
            if (!mine_repo_id.empty() && (mine_repos || mine_roots.size() > 1)) {
                throw UsageError("--repo-id applies to a single repository root");
            }
            MiningResult all;
            for (const auto& root : mine_roots) {
                auto r = mine_repos ? mine_repositories(root, jobs) : mine_repository(root, mine_repo_id, jobs);
                if (!mine_repos) {
                    for (auto& f : r.report.failures) f.rel_path = r.report.repo_id + "/" + f.rel_path;
                }
                all.report.merge(r.report);
                for (auto& p : r.pairs) all.pairs.push_back(std::move(p));
            }
            all.report.repo_id = join(mine_roots, ",");
            emit_jsonl(to_json_values(all.pairs), mine_out, g, out);
            if (!mine_report.empty()) write_json(mine_report, json(all.report));
            return 0;
        }

        if (render->parsed()) {
            auto levels = render_level.empty() ? cfg.levels : parse_level_list(render_level);
            const std::size_t budget = render_budget ? render_budget : cfg.budget;
            auto strategy = cfg.token_strategy;
            if (!render_strategy.empty()) {
                auto s = parse_token_strategy(render_strategy);
                if (!s) throw UsageError("--token-strategy must be lexical or whitespace");
                strategy = *s;
            }
            auto pairs = read_pairs(render_pairs);
            std::vector<std::vector<MappedPair>> rendered(pairs.size());
            parallel_for(pairs.size(), jobs, [&](std::size_t i) {
                for (auto level : levels) {
                    MappedPair p = pairs[i];
                    p.context = render_context(p, level, budget, strategy).attached();
                    rendered[i].push_back(std::move(p));
                }
            });
            std::vector<MappedPair> flat;
            for (auto& r : rendered) {
                for (auto& p : r) flat.push_back(std::move(p));
            }
            emit_jsonl(to_json_values(flat), render_out, g, out);
            return 0;
        }

        if (split->parsed()) {
            auto fractions = split_fractions.empty() ? cfg.fractions : parse_fractions(split_fractions);
            const std::uint64_t seed = split_seed.empty() ? cfg.seed : parse_seed(split_seed);
            auto dedup = split_dedup.empty() ? cfg.dedup : parse_dedup_setting(split_dedup);
            if (split_out_dir.empty() && !g.to_stdout) throw UsageError("--out-dir is required (or pass --stdout)");
            auto pairs = read_pairs(split_pairs);
            const std::size_t input = pairs.size();
            if (dedup) pairs = deduplicate(pairs, *dedup);
            auto result = split_by_repo(pairs, fractions, seed);
            const auto achieved = result.achieved();
            json splits = json::object();
            const std::vector<MappedPair>* parts[] = {&result.train, &result.validation, &result.test};
            for (std::size_t s = 0; s < 3; ++s) {
                splits[std::string(kSplitNames[s])] = {
                    {"pairs", parts[s]->size()}, {"repos", result.repos[s]}, {"fraction", achieved[s]}};
            }
            json summary = {{"seed", seed},
                            {"fractions", {{"train", fractions.train}, {"validation", fractions.validation}, {"test", fractions.test}}},
                            {"dedup", dedup ? std::string(to_string(*dedup)) : std::string("none")},
                            {"input_pairs", input},
                            {"unique_pairs", pairs.size()},
                            {"splits", splits}};
            if (!split_out_dir.empty()) {
                fs::path dir(split_out_dir);
                for (std::size_t s = 0; s < 3; ++s) {
                    write_jsonl(dir / (std::string(kSplitNames[s]) + ".jsonl"), *parts[s]);
                }
                write_json(dir / "split_report.json", summary);
            }
            if (g.to_stdout) out << summary.dump(2) << '\n';
            return 0;
        }

        if (analyze->parsed()) {
            OverlapOptions opt;
            opt.budget = analyze_budget ? analyze_budget : cfg.budget;
            opt.truncate = !analyze_full;
            opt.jobs = jobs;
            if (analyze_overlap == "multiset") {
                opt.mode = OverlapMode::Multiset;
            } else if (!analyze_overlap.empty() && analyze_overlap != "set") {
                throw UsageError("--overlap must be set or multiset");
            }
            auto levels = analyze_levels.empty() ? cfg.levels : parse_level_list(analyze_levels);
            auto pairs = read_pairs(analyze_pairs);
            auto stats = overlap_distribution(pairs, levels, opt);
            json j = stats.to_json();
            j["options"] = {{"budget", opt.budget},
                            {"truncated_renderings", opt.truncate},
                            {"overlap", opt.mode == OverlapMode::Set ? "set" : "multiset"},
                            {"pairs", pairs.size()}};
            if (analyze_out.empty() && analyze_csv.empty() && !g.to_stdout) {
                throw UsageError("--out or --csv is required (or pass --stdout)");
            }
            if (!analyze_out.empty()) write_json(analyze_out, j);
            if (!analyze_csv.empty()) {
                std::ostringstream csv;
                stats.write_csv(csv);
                write_text(analyze_csv, csv.str());
            }
            if (g.to_stdout) out << j.dump(2) << '\n';
            return 0;
        }

        if (validate->parsed()) {
            std::string api_path = validate_api.empty() ? cfg.api_lists.string() : validate_api;
            ApiCatalog catalog = api_path.empty() ? ApiCatalog::defaults() : ApiCatalog::load(api_path);
            auto candidates = read_candidates(validate_candidates);
            std::vector<MappedPair> pairs;
            if (!validate_pairs.empty()) pairs = read_pairs(validate_pairs);
            auto missing = resolve_focal(candidates, pairs);
            if (!missing.empty()) {
                warn(err, std::to_string(missing.size()) + " candidate(s) without a focal target; invokes_focal_method left null");
            }
            std::vector<ValidationRecord> records(candidates.size());
            parallel_for(candidates.size(), jobs, [&](std::size_t i) { records[i] = validate_candidate(candidates[i], catalog); });
            std::vector<json> values;
            for (const auto& r : records) {
                json j = r;
                j["schema_version"] = kSchemaVersion;
                values.push_back(std::move(j));
            }
            emit_jsonl(values, validate_out, g, out);
            if (!validate_profile.empty()) {
                std::vector<ApiProfile> generated;
                for (const auto& r : records) {
                    if (r.api) generated.push_back(*r.api);
                }
                // Reference population: the original test cases of the pairs the candidates target.
                std::vector<ApiProfile> original;
                std::set<std::string> wanted;
                for (const auto& c : candidates) wanted.insert(c.focal_pair_id);
                for (const auto& p : pairs) {
                    if (wanted.count(p.pair_id)) original.push_back(api_profile(p.test_case, catalog));
                }
                auto cmp = compare_profiles(original, generated, catalog, "original", "generated");
                json j = cmp.to_json();
                json counts = json::array();
                for (const auto& r : records) {
                    if (r.api) counts.push_back({{"id", r.id}, {"profile", *r.api}});
                }
                j["candidates"] = counts;
                write_json(validate_profile, j);
            }
            return 0;
        }

        if (evaluate->parsed()) {
            fs::path runner_path = eval_runner.empty() ? cfg.runner : fs::path(eval_runner);
            if (runner_path.empty()) throw UsageError("--runner is required (or set runner in the config)");
            auto runner = RunnerConfig::load(runner_path);
            if (!eval_project.empty()) {
                if (!fs::is_directory(eval_project)) throw std::runtime_error("not a directory: " + eval_project);
                runner.project_dir = fs::absolute(eval_project);
                runner.project = runner.project_dir.filename().string();
            }
            if (!eval_work.empty()) runner.work_root = fs::absolute(eval_work);
            auto candidates = read_candidates(eval_candidates);
            std::vector<MappedPair> pairs;
            if (!eval_pairs.empty()) pairs = read_pairs(eval_pairs);
            auto missing = resolve_focal(candidates, pairs);
            if (!missing.empty()) {
                warn(err, std::to_string(missing.size()) + " candidate(s) without a focal target; they cannot be correct");
            }
            auto verdicts = evaluate_candidates(candidates, runner, jobs);
            emit_jsonl(to_json_values(verdicts), eval_out, g, out);
            auto summary = aggregate(verdicts);
            if (!eval_summary.empty()) write_json(eval_summary, summary.to_json());
            if (!eval_table.empty()) write_text(eval_table, summary.table());
            for (const auto& w : summary.warnings) warn(err, w);
            return 0;
        }

        if (report->parsed()) {
            auto values = read_jsonl<Verdict>(report_verdicts);
            std::vector<std::string> expected;
            if (!report_methods.empty()) {
                std::ifstream in(report_methods);
                if (!in) throw std::runtime_error("cannot open " + report_methods);
                for (std::string line; std::getline(in, line);) {
                    if (!line.empty() && line.back() == '\r') line.pop_back();
                    if (!line.empty()) expected.push_back(line);
                }
            }
            auto summary = aggregate(values, expected);
            if (report_summary.empty() && report_table.empty() && !g.to_stdout) {
                throw UsageError("--summary or --table is required (or pass --stdout)");
            }
            if (!report_summary.empty()) write_json(report_summary, summary.to_json());
            if (!report_table.empty()) write_text(report_table, summary.table());
            if (g.to_stdout) out << summary.table();
            for (const auto& w : summary.warnings) warn(err, w);
            return 0;
        }
        return fail("usage", "no subcommand", 2);
    } catch (const UsageError& e) {
        return fail("usage", e.what(), 2);
    } catch (const JsonlError& e) {
        return fail("schema", e.what(), 1);
    } catch (const ConfigError& e) {
        return fail("config", e.what(), 1);
    } catch (const SplitError& e) {
        return fail("input", e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return fail("usage", e.what(), 2);
    } catch (const fs::filesystem_error& e) {
        return fail("io", e.what(), 1);
    } catch (const std::exception& e) {
        return fail("error", e.what(), 1);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("focalforge");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace focalforge::cli
