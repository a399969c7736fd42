#include "focalforge/validator.hpp"

#include "focalforge/java_lexer.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

namespace focalforge {

using nlohmann::json;

namespace {

std::string wrap(std::string_view text) {
    std::string s = "class __W { ";
    s += text;
    s += "\n}";
    return s;
}

template <class T>
void get_optional(const json& j, const char* key, T& out) {
    auto it = j.find(key);
    if (it != j.end() && !it->is_null()) it->get_to(out);
}

}  // namespace

FocalRef FocalRef::from(const MappedPair& pair) {
    FocalRef f;
    f.class_name = pair.focal_class.qualified_name.empty() ? pair.focal_class.name : pair.focal_class.qualified_name;
    f.package_name = pair.focal_class.package_name;
    f.method_name = pair.focal_method.name;
    for (const auto& p : pair.focal_method.parameters) f.parameter_types.push_back(p.type);
    return f;
}

void to_json(json& j, const FocalRef& f) {
    j = json{{"class", f.class_name},
             {"package", f.package_name},
             {"method", f.method_name},
             {"parameter_types", f.parameter_types}};
}

void from_json(const json& j, FocalRef& f) {
    f = FocalRef{};
    j.at("method").get_to(f.method_name);
    get_optional(j, "class", f.class_name);
    get_optional(j, "package", f.package_name);
    get_optional(j, "parameter_types", f.parameter_types);
}

void to_json(json& j, const Candidate& c) {
    j = json{{"id", c.id}, {"focal_pair_id", c.focal_pair_id}, {"text", c.text}, {"generator", c.generator}};
    if (c.repaired) j["repaired"] = true;
    if (c.focal) j["focal"] = *c.focal;
}

void from_json(const json& j, Candidate& c) {
    c = Candidate{};
    j.at("id").get_to(c.id);
    j.at("text").get_to(c.text);
    get_optional(j, "focal_pair_id", c.focal_pair_id);
    get_optional(j, "generator", c.generator);
    get_optional(j, "repaired", c.repaired);
    if (auto it = j.find("focal"); it != j.end() && !it->is_null()) c.focal = it->get<FocalRef>();
}

std::vector<std::string> resolve_focal(std::vector<Candidate>& candidates, const std::vector<MappedPair>& pairs) {
    std::unordered_map<std::string, const MappedPair*> by_id;
    for (const auto& p : pairs) by_id.emplace(p.pair_id, &p);
    std::vector<std::string> missing;
    for (auto& c : candidates) {
        if (c.focal) continue;
        if (auto it = by_id.find(c.focal_pair_id); it != by_id.end()) {
            c.focal = FocalRef::from(*it->second);
        } else {
            missing.push_back(c.id);
        }
    }
    return missing;
}

SyntaxCheck check_syntax(std::string_view text) {
    std::string diag = syntax_diagnostic(wrap(text));
    return {diag.empty(), diag};
}

SyntaxCheck check_syntax(const Candidate& c) { return check_syntax(c.text); }

Candidate repair_truncation(const Candidate& c) {
    if (check_syntax(c.text).ok) return c;
    const auto tokens = lex_java(c.text, LexMode::Permissive);

    // Cut candidates: the body's opening brace, then every `;`/`}` after it outside parentheses.
    std::vector<std::size_t> cuts;
    int parens = 0;
    bool in_body = false;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        const auto& t = tokens[i];
        if (t.kind != TokenKind::Separator) continue;
        if (t.text == "(") {
            ++parens;
        } else if (t.text == ")") {
            parens = std::max(parens - 1, 0);
        } else if (parens == 0 && t.text == "{" && !in_body) {
            in_body = true;
            cuts.push_back(i);
        } else if (parens == 0 && in_body && (t.text == ";" || t.text == "}")) {
            cuts.push_back(i);
        }
    }

    for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
        int depth = 0;
        for (std::size_t i = 0; i <= *it; ++i) {
            if (tokens[i].kind != TokenKind::Separator) continue;
            if (tokens[i].text == "{") ++depth;
            if (tokens[i].text == "}") --depth;
        }
        if (depth < 0) continue;
        std::string text = c.text.substr(0, tokens[*it].end());
        for (int d = 0; d < depth; ++d) text += " }";
        if (text == c.text) continue;
        if (check_syntax(text).ok) {
            Candidate out = c;
            out.text = std::move(text);
            out.repaired = true;
            return out;
        }
    }
    return c;
}

MethodModel candidate_method(const Candidate& c) {
    std::vector<ClassModel> classes;
    try {
        classes = parse_file(SourceFile{"", "<candidate " + c.id + ">", wrap(c.text)});
    } catch (const ParseFailure& e) {
        throw UnparseableCandidate(c.id, e.reason());
    }
    for (const auto& cls : classes) {
        if (cls.name == "__W" && !cls.methods.empty()) return cls.methods.front();
    }
    throw UnparseableCandidate(c.id, "no method declaration");
}

bool has_test_annotation(const Candidate& c) { return is_test_method(candidate_method(c)); }

bool invokes_focal_method(const Candidate& c, std::string_view focal_method_name) {
    const auto m = candidate_method(c);
    return std::find(m.invocations.begin(), m.invocations.end(), focal_method_name) != m.invocations.end();
}

ApiCatalog ApiCatalog::defaults() {
    ApiCatalog c;
    c.groups["junit"] = {"assertEquals", "assertTrue",      "assertFalse",       "assertNull",   "assertNotNull",
                         "assertSame",   "assertNotSame",   "assertArrayEquals", "assertThrows", "fail"};
    c.groups["mockito"] = {"mock", "verify", "when", "thenReturn", "spy", "doReturn", "doThrow", "any", "eq", "times"};
    return c;
}

ApiCatalog ApiCatalog::from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("API catalog must be a JSON object of name lists");
    ApiCatalog c;
    for (const auto& [group, names] : j.items()) {
        if (!names.is_array()) throw std::invalid_argument("API group '" + group + "' must be an array");
        c.groups[group] = names.get<std::vector<std::string>>();
    }
    return c;
}

ApiCatalog ApiCatalog::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
    return from_json(j);
}

std::optional<std::string> ApiCatalog::group_of(std::string_view name) const {
    for (const auto& [group, names] : groups) {
        if (std::find(names.begin(), names.end(), name) != names.end()) return group;
    }
    return std::nullopt;
}

std::size_t ApiProfile::count(std::string_view api) const {
    auto it = counts.find(std::string(api));
    return it == counts.end() ? 0 : it->second;
}

void to_json(json& j, const ApiProfile& p) { j = json{{"counts", p.counts}, {"total", p.total}}; }

ApiProfile api_profile(const MethodModel& method, const ApiCatalog& catalog) {
    ApiProfile p;
    for (const auto& name : method.invocations) {
        if (!catalog.group_of(name)) continue;
        ++p.counts[name];
        ++p.total;
    }
    return p;
}

ApiProfile api_profile(const Candidate& c, const ApiCatalog& catalog) {
    return api_profile(candidate_method(c), catalog);
}

PopulationProfile summarize_profiles(const std::string& label, const std::vector<ApiProfile>& profiles,
                                     const ApiCatalog& catalog) {
    PopulationProfile pop;
    pop.label = label;
    pop.candidates = profiles.size();
    std::vector<double> totals;
    for (const auto& p : profiles) {
        for (const auto& [api, n] : p.counts) {
            pop.api_totals[api] += n;
            if (auto g = catalog.group_of(api)) pop.group_totals[*g] += n;
        }
        totals.push_back(static_cast<double>(p.total));
    }
    pop.per_candidate = summarize(std::move(totals));
    return pop;
}

ProfileComparison compare_profiles(const std::vector<ApiProfile>& a, const std::vector<ApiProfile>& b,
                                   const ApiCatalog& catalog, const std::string& label_a, const std::string& label_b) {
    return {summarize_profiles(label_a, a, catalog), summarize_profiles(label_b, b, catalog)};
}

json ProfileComparison::to_json() const {
    auto one = [](const PopulationProfile& p) {
        return json{{"label", p.label},
                    {"candidates", p.candidates},
                    {"api_totals", p.api_totals},
                    {"group_totals", p.group_totals},
                    {"per_candidate", p.per_candidate}};
    };
    return json{{"populations", json::array({one(a), one(b)})}};
}

void to_json(json& j, const ValidationRecord& r) {
    j = json{{"id", r.id},
             {"focal_pair_id", r.focal_pair_id},
             {"generator", r.generator},
             {"syntax_ok", r.syntax_ok},
             {"original_syntax_ok", r.original_syntax_ok},
             {"repaired", r.repaired},
             {"diagnostic", r.diagnostic},
             {"text", r.text}};
    j["has_test_annotation"] = r.has_test_annotation ? json(*r.has_test_annotation) : json(nullptr);
    j["invokes_focal_method"] = r.invokes_focal_method ? json(*r.invokes_focal_method) : json(nullptr);
    j["api"] = r.api ? json(*r.api) : json(nullptr);
}

ValidationRecord validate_candidate(const Candidate& c, const ApiCatalog& catalog) {
    ValidationRecord r;
    r.id = c.id;
    r.focal_pair_id = c.focal_pair_id;
    r.generator = c.generator;
    auto first = check_syntax(c);
    r.original_syntax_ok = first.ok;
    Candidate fixed = first.ok ? c : repair_truncation(c);
    r.repaired = fixed.repaired && !first.ok;
    r.syntax_ok = first.ok || r.repaired;
    r.diagnostic = first.diagnostic;
    r.text = fixed.text;
    if (!r.syntax_ok) return r;
    MethodModel m;
    try {
        m = candidate_method(fixed);
    } catch (const UnparseableCandidate& e) {
        r.syntax_ok = false;
        r.diagnostic = e.what();
        return r;
    }
    r.has_test_annotation = is_test_method(m);
    if (fixed.focal) {
        r.invokes_focal_method =
            std::find(m.invocations.begin(), m.invocations.end(), fixed.focal->method_name) != m.invocations.end();
    }
    r.api = api_profile(m, catalog);
    return r;
}

}  // namespace focalforge
