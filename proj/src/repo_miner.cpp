#include "focalforge/repo_miner.hpp"

#include "focalforge/parallel.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <variant>

namespace focalforge {

namespace fs = std::filesystem;

std::string_view to_string(ClassMatch m) { return m == ClassMatch::Path ? "path" : "name"; }
std::string_view to_string(MethodMatch m) { return m == MethodMatch::Name ? "name" : "unique_call"; }

ClassMatch class_match_from_string(std::string_view s) {
    if (s == "path") return ClassMatch::Path;
    if (s == "name") return ClassMatch::Name;
    throw std::invalid_argument("unknown class_match '" + std::string(s) + "'");
}

MethodMatch method_match_from_string(std::string_view s) {
    if (s == "name") return MethodMatch::Name;
    if (s == "unique_call") return MethodMatch::UniqueCall;
    throw std::invalid_argument("unknown method_match '" + std::string(s) + "'");
}

FocalClassSummary FocalClassSummary::from(const ClassModel& cls) {
    FocalClassSummary s;
    s.name = cls.name;
    s.qualified_name = cls.qualified_name;
    s.package_name = cls.package_name;
    s.kind = cls.kind;
    for (const auto& m : cls.methods) {
        s.methods.push_back({m.name, m.signature, m.header, m.modifiers, m.is_constructor});
    }
    s.fields = cls.fields;
    return s;
}

bool FocalClassSummary::member_is_public(const std::vector<std::string>& modifiers) const {
    auto has = [&](std::string_view m) { return std::find(modifiers.begin(), modifiers.end(), m) != modifiers.end(); };
    if (has("public")) return true;
    return (kind == ClassKind::Interface || kind == ClassKind::Annotation) && !has("private");
}

void MiningReport::merge(const MiningReport& other) {
    files_seen += other.files_seen;
    files_parsed += other.files_parsed;
    parse_failures += other.parse_failures;
    classes += other.classes;
    test_classes += other.test_classes;
    test_cases += other.test_cases;
    pairs_mapped += other.pairs_mapped;
    for (const auto& [k, v] : other.discards) discards[k] += v;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::vector<ClassModel> find_test_classes(std::span<const ClassModel> repo) {
    std::vector<ClassModel> out;
    std::copy_if(repo.begin(), repo.end(), std::back_inserter(out), is_test_class);
    return out;
}

std::vector<std::string> strip_test_affixes(std::string_view class_name) {
    std::vector<std::string> out;
    constexpr std::string_view kTest = "Test";
    if (class_name.size() > kTest.size() && class_name.ends_with(kTest)) {
        out.emplace_back(class_name.substr(0, class_name.size() - kTest.size()));
    }
    if (class_name.size() > kTest.size() && class_name.starts_with(kTest)) {
        std::string stripped(class_name.substr(kTest.size()));
        if (std::find(out.begin(), out.end(), stripped) == out.end()) out.push_back(std::move(stripped));
    }
    return out;
}

std::optional<std::string> mirrored_main_path(std::string_view test_path, std::string_view focal_name) {
    std::vector<std::string> segments;
    std::stringstream ss{std::string(test_path)};
    for (std::string seg; std::getline(ss, seg, '/');) segments.push_back(seg);
    if (segments.size() < 2) return std::nullopt;
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < segments.size() - 1; ++i) {
        if (segments[i] == "src" && segments[i + 1] == "test") {
            segments[i + 1] = "main";
            swapped = true;
            break;
        }
    }
    if (!swapped) return std::nullopt;
    segments.back() = std::string(focal_name) + ".java";
    std::string out;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (i) out.push_back('/');
        out += segments[i];
    }
    return out;
}

ClassResolution match_focal_class(const ClassModel& test_class, std::span<const ClassModel> repo) {
    ClassResolution res;
    const auto names = strip_test_affixes(test_class.name);
    if (names.empty()) {
        res.discard_reason = std::string(kNoFocalClass);
        return res;
    }
    for (const auto& name : names) {
        auto mirrored = mirrored_main_path(test_class.rel_path, name);
        if (!mirrored) continue;
        for (const auto& cls : repo) {
            if (cls.rel_path == *mirrored && cls.name == name && !is_test_class(cls)) {
                res.focal = &cls;
                res.match = ClassMatch::Path;
                return res;
            }
        }
    }
    for (const auto& name : names) {
        std::vector<const ClassModel*> found;
        for (const auto& cls : repo) {
            if (cls.name == name && !is_test_class(cls)) found.push_back(&cls);
        }
        if (found.size() == 1) {
            res.focal = found.front();
            res.match = ClassMatch::Name;
            return res;
        }
        if (found.size() > 1) {
            res.discard_reason = std::string(kAmbiguousFocalClass);
            res.ambiguous_name = name;
            res.candidates = found.size();
            return res;
        }
    }
    res.discard_reason = std::string(kNoFocalClass);
    return res;
}

namespace {

// Candidate method names for a test name: suffix-stripped, prefix-stripped, then the name itself.
std::vector<std::string> focal_name_variants(std::string_view test_name) {
    std::vector<std::string> out;
    auto add = [&](std::string_view v) {
        if (!v.empty() && std::find(out.begin(), out.end(), v) == out.end()) out.emplace_back(v);
    };
    for (std::string_view affix : {"Test", "test"}) {
        if (test_name.size() > affix.size() && test_name.ends_with(affix))
            add(test_name.substr(0, test_name.size() - affix.size()));
    }
    for (std::string_view affix : {"test", "Test"}) {
        if (test_name.size() > affix.size() && test_name.starts_with(affix)) add(test_name.substr(affix.size()));
    }
    add(test_name);
    return out;
}

bool same_name_ignoring_first_case(std::string_view a, std::string_view b) {
    if (a.size() != b.size() || a.empty()) return false;
    return std::tolower(static_cast<unsigned char>(a[0])) == std::tolower(static_cast<unsigned char>(b[0])) &&
           a.substr(1) == b.substr(1);
}

bool arity_fits(const MethodModel& m, int arity) {
    const int n = static_cast<int>(m.parameters.size());
    if (m.is_varargs()) return arity >= n - 1;
    return arity == n;
}

}  // namespace

MethodResolution match_focal_method(const MethodModel& test_case, const ClassModel& focal_class) {
    MethodResolution res;
    for (const auto& variant : focal_name_variants(test_case.name)) {
        const MethodModel* hit = nullptr;
        std::size_t hits = 0;
        for (const auto& m : focal_class.methods) {
            if (m.is_constructor) continue;
            if (same_name_ignoring_first_case(variant, m.name)) {
                hit = &m;
                ++hits;
            }
        }
        if (hits == 1) {
            res.focal = hit;
            res.match = MethodMatch::Name;
            return res;
        }
    }

    std::set<std::string> defined;
    for (const auto& m : focal_class.methods) defined.insert(m.name);
    std::set<std::string> shared;
    for (const auto& call : test_case.invocations) {
        if (defined.count(call)) shared.insert(call);
    }
    if (shared.size() != 1) {
        res.discard_reason = std::string(kNoFocalMethod);
        return res;
    }
    const std::string& name = *shared.begin();
    std::vector<const MethodModel*> overloads;
    for (const auto& m : focal_class.methods) {
        if (m.name == name) overloads.push_back(&m);
    }
    if (overloads.size() > 1) {
        std::set<int> arities;
        for (std::size_t i = 0; i < test_case.invocations.size(); ++i) {
            if (test_case.invocations[i] == name) arities.insert(test_case.invocation_arity[i]);
        }
        std::vector<const MethodModel*> fitting;
        for (const auto* m : overloads) {
            if (std::any_of(arities.begin(), arities.end(), [&](int a) { return arity_fits(*m, a); }))
                fitting.push_back(m);
        }
        if (fitting.size() != 1) {
            res.discard_reason = std::string(kOverloadAmbiguous);
            return res;
        }
        overloads = fitting;
    }
    if (overloads.front()->is_constructor) {
        res.discard_reason = std::string(kConstructorFocal);
        return res;
    }
    res.focal = overloads.front();
    res.match = MethodMatch::UniqueCall;
    return res;
}

namespace {

using ParsedFile = std::variant<std::vector<ClassModel>, FileFailure>;

}  // namespace

MiningResult mine_sources(const std::vector<SourceFile>& input, int jobs) {
    std::vector<const SourceFile*> files;
    for (const auto& f : input) files.push_back(&f);
    std::stable_sort(files.begin(), files.end(),
                     [](const SourceFile* a, const SourceFile* b) { return a->rel_path < b->rel_path; });

    std::vector<ParsedFile> parsed(files.size());
    parallel_for(files.size(), jobs, [&](std::size_t i) {
        try {
            parsed[i] = parse_file(*files[i]);
        } catch (const ParseFailure& e) {
            parsed[i] = FileFailure{e.path(), e.reason()};
        }
    });

    MiningResult result;
    MiningReport& report = result.report;
    report.repo_id = input.empty() ? std::string() : input.front().repo_id;
    report.files_seen = files.size();
    std::vector<ClassModel> repo;
    for (auto& p : parsed) {
        if (auto* failure = std::get_if<FileFailure>(&p)) {
            ++report.parse_failures;
            report.failures.push_back(std::move(*failure));
            continue;
        }
        ++report.files_parsed;
        for (auto& cls : std::get<std::vector<ClassModel>>(p)) repo.push_back(std::move(cls));
    }
    report.classes = repo.size();

    std::unordered_map<std::string, int> id_uses;
    for (const auto& test_class : repo) {
        if (!is_test_class(test_class)) continue;
        ++report.test_classes;
        std::vector<const MethodModel*> tests;
        for (const auto& m : test_class.methods) {
            if (is_test_method(m)) tests.push_back(&m);
        }
        report.test_cases += tests.size();

        ClassResolution cls = match_focal_class(test_class, repo);
        if (!cls.focal) {
            report.discards[cls.discard_reason] += tests.size();
            continue;
        }
        for (const MethodModel* test : tests) {
            MethodResolution method = match_focal_method(*test, *cls.focal);
            if (!method.focal) {
                ++report.discards[method.discard_reason];
                continue;
            }
            MappedPair pair;
            pair.repo_id = report.repo_id;
            pair.test_class_path = test_class.rel_path;
            pair.test_class_name = test_class.qualified_name;
            pair.test_case = *test;
            pair.focal_class_path = cls.focal->rel_path;
            pair.focal_class = FocalClassSummary::from(*cls.focal);
            pair.focal_method = *method.focal;
            pair.class_match = cls.match;
            pair.method_match = method.match;
            std::string id = pair.repo_id + ":" + pair.test_class_path + ":" + pair.test_class_name + "." + test->name;
            if (int n = ++id_uses[id]; n > 1) id += "~" + std::to_string(n);
            pair.pair_id = std::move(id);
            result.pairs.push_back(std::move(pair));
        }
    }
    report.pairs_mapped = result.pairs.size();
    return result;
}

MiningResult mine_repository(const fs::path& root, std::string repo_id, int jobs) {
    if (repo_id.empty()) repo_id = fs::absolute(root).lexically_normal().filename().string();
    if (repo_id.empty()) repo_id = fs::absolute(root).lexically_normal().parent_path().filename().string();
    if (!fs::is_directory(root)) throw std::runtime_error("not a directory: " + root.string());

    std::vector<fs::path> paths;
    for (auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied);
         it != fs::recursive_directory_iterator(); ++it) {
        std::error_code ec;
        if (it->is_regular_file(ec) && it->path().extension() == ".java") paths.push_back(it->path());
    }
    std::sort(paths.begin(), paths.end());

    std::vector<SourceFile> files;
    std::vector<FileFailure> io_failures;
    for (const auto& p : paths) {
        std::string rel = p.lexically_relative(root).generic_string();
        std::ifstream in(p, std::ios::binary);
        std::ostringstream content;
        if (!in || !(content << in.rdbuf())) {
            io_failures.push_back({rel, "io: cannot read file"});
            continue;
        }
        files.push_back({repo_id, rel, content.str()});
    }
    MiningResult result = mine_sources(files, jobs);
    result.report.repo_id = repo_id;
    result.report.files_seen += io_failures.size();
    result.report.parse_failures += io_failures.size();
    result.report.failures.insert(result.report.failures.end(), io_failures.begin(), io_failures.end());
    std::sort(result.report.failures.begin(), result.report.failures.end(),
              [](const FileFailure& a, const FileFailure& b) { return a.rel_path < b.rel_path; });
    return result;
}

MiningResult mine_repositories(const fs::path& root, int jobs) {
    if (!fs::is_directory(root)) throw std::runtime_error("not a directory: " + root.string());
    std::vector<fs::path> repos;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_directory()) repos.push_back(entry.path());
    }
    std::sort(repos.begin(), repos.end());

    std::vector<MiningResult> results(repos.size());
    parallel_for(repos.size(), jobs, [&](std::size_t i) { results[i] = mine_repository(repos[i], {}, 1); });

    MiningResult merged;
    merged.report.repo_id = "*";
    for (auto& r : results) {
        for (auto& f : r.report.failures) f.rel_path = r.report.repo_id + "/" + f.rel_path;
        merged.report.merge(r.report);
        for (auto& p : r.pairs) merged.pairs.push_back(std::move(p));
    }
    return merged;
}

}  // namespace focalforge
