#include "support.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fs = std::filesystem;
using nlohmann::json;

namespace support {

fs::path fixture_dir() { return FOCALFORGE_FIXTURES; }
fs::path fixture_repos() { return fixture_dir() / "repos"; }

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const fs::path& path) { return json::parse(read_file(path)); }

std::vector<json> read_json_lines(const fs::path& path) {
    std::vector<json> out;
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(json::parse(line));
    }
    return out;
}

TempDir::TempDir(std::string_view tag) {
    static std::atomic<unsigned> counter{0};
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path_ = fs::temp_directory_path() /
            (std::string(tag) + "-" + std::to_string(stamp) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

// ---- token oracle -----------------------------------------------------------

namespace {

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words{
        "abstract", "assert",     "boolean",   "break",     "byte",      "case",         "catch",
        "char",     "class",      "const",     "continue",  "default",   "do",           "double",
        "else",     "enum",       "extends",   "final",     "finally",   "float",        "for",
        "goto",     "if",         "implements", "import",   "instanceof", "int",         "interface",
        "long",     "native",     "new",       "package",   "private",   "protected",    "public",
        "return",   "short",      "static",    "strictfp",  "super",     "switch",       "synchronized",
        "this",     "throw",      "throws",    "transient", "try",       "void",         "volatile",
        "while"};
    return words;
}

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<OracleToken> oracle_scan(std::string_view s) {
    static const std::array<std::string_view, 30> ops{
        "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", "<<", "+=", "-=", "*=",
        "/=",  "%=",  "&=", "|=", "^=", "(",  ")",  "{",  "}",  "[",  "]",  ";",  ",",  ".",  "@"};
    std::vector<OracleToken> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (s.substr(i, 2) == "//") {
            while (i < s.size() && s[i] != '\n') ++i;
        } else if (s.substr(i, 2) == "/*") {
            auto end = s.find("*/", i + 2);
            i = end == std::string_view::npos ? s.size() : end + 2;
        } else if (s.substr(i, 3) == "\"\"\"") {
            auto end = s.find("\"\"\"", i + 3);
            std::size_t stop = end == std::string_view::npos ? s.size() : end + 3;
            out.push_back({OracleKind::Literal, std::string(s.substr(i, stop - i))});
            i = stop;
        } else if (c == '"' || c == '\'') {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] != c && s[j] != '\n') j += (s[j] == '\\') ? 2 : 1;
            j = std::min(j < s.size() && s[j] == c ? j + 1 : j, s.size());
            out.push_back({OracleKind::Literal, std::string(s.substr(i, j - i))});
            i = j;
        } else if (digit(c) || (c == '.' && i + 1 < s.size() && digit(s[i + 1]))) {
            std::size_t j = i;
            const bool hex = s.substr(i, 2) == "0x" || s.substr(i, 2) == "0X";
            while (j < s.size()) {
                const char d = s[j];
                const char prev = j > i ? static_cast<char>(std::tolower(static_cast<unsigned char>(s[j - 1]))) : 0;
                if (word_char(d) || d == '.') {
                    ++j;
                } else if ((d == '+' || d == '-') && ((!hex && prev == 'e') || (hex && prev == 'p'))) {
                    ++j;
                } else {
                    break;
                }
            }
            out.push_back({OracleKind::Literal, std::string(s.substr(i, j - i))});
            i = j;
        } else if (word_start(c)) {
            std::size_t j = i;
            while (j < s.size() && word_char(s[j])) ++j;
            std::string w(s.substr(i, j - i));
            OracleKind kind = reserved_words().count(w) ? OracleKind::Keyword : OracleKind::Word;
            if (w == "true" || w == "false" || w == "null") kind = OracleKind::Keyword;
            out.push_back({kind, std::move(w)});
            i = j;
        } else if (c == '>') {
            const bool ge = i + 1 < s.size() && s[i + 1] == '=';
            out.push_back({OracleKind::Punct, ge ? ">=" : ">"});
            i += ge ? 2 : 1;
        } else {
            std::string_view hit;
            for (auto op : ops) {
                if (s.substr(i, op.size()) == op) {
                    hit = op;
                    break;
                }
            }
            if (hit.empty()) hit = s.substr(i, 1);
            out.push_back({OracleKind::Punct, std::string(hit)});
            i += hit.size();
        }
    }
    return out;
}

std::vector<std::string> oracle_ingredients(std::string_view code) {
    std::vector<std::string> out;
    for (auto& t : oracle_scan(code)) {
        if (t.kind == OracleKind::Word || t.kind == OracleKind::Literal) out.push_back(std::move(t.text));
    }
    return out;
}

std::size_t oracle_shared(std::string_view a, std::string_view b) {
    auto distinct = [](std::vector<std::string> v) {
        std::vector<std::string> out;
        for (auto& x : v) {
            bool seen = false;
            for (const auto& y : out) seen = seen || y == x;
            if (!seen) out.push_back(std::move(x));
        }
        return out;
    };
    const auto xs = distinct(oracle_ingredients(a));
    const auto ys = distinct(oracle_ingredients(b));
    std::size_t n = 0;
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            if (x == y) ++n;
        }
    }
    return n;
}

std::vector<std::string> oracle_token_texts(std::string_view code) {
    std::vector<std::string> out;
    for (auto& t : oracle_scan(code)) out.push_back(std::move(t.text));
    return out;
}

std::map<std::string, std::size_t> oracle_api_calls(std::string_view method_text, const std::set<std::string>& apis) {
    const auto toks = oracle_scan(method_text);
    // The declared name is the first word followed by `(` outside an annotation.
    std::size_t declared = toks.size();
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].kind != OracleKind::Word || toks[i + 1].text != "(") continue;
        const bool annotation = i > 0 && (toks[i - 1].text == "@" || toks[i - 1].text == ".");
        if (!annotation) {
            declared = i;
            break;
        }
    }
    std::map<std::string, std::size_t> counts;
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        if (i == declared || toks[i].kind != OracleKind::Word || toks[i + 1].text != "(") continue;
        if (i > 0 && (toks[i - 1].text == "new" || toks[i - 1].text == "@")) continue;
        if (apis.count(toks[i].text)) ++counts[toks[i].text];
    }
    return counts;
}

// ---- fixture corpus ---------------------------------------------------------

std::vector<focalforge::MappedPair> fixture_pairs() {
    std::vector<fs::path> dirs;
    for (const auto& e : fs::directory_iterator(fixture_repos())) {
        if (e.is_directory()) dirs.push_back(e.path());
    }
    std::sort(dirs.begin(), dirs.end());
    std::vector<focalforge::MappedPair> out;
    for (const auto& d : dirs) {
        auto r = focalforge::mine_repository(d, d.filename().string());
        for (auto& p : r.pairs) out.push_back(std::move(p));
    }
    return out;
}

std::vector<LabeledPair> labeled_pairs() {
    std::vector<LabeledPair> out;
    const json labels = read_json(fixture_repos() / "labels.json");
    for (const auto& j : labels.at("pairs")) {
        out.push_back({j.at("repo"), j.at("test_class"), j.at("test_case"), j.at("focal_class"),
                       j.at("focal_signature"), j.at("class_match"), j.at("method_match")});
    }
    return out;
}

LabeledPair label_of(const focalforge::MappedPair& p) {
    return {p.repo_id,
            p.test_class_name,
            p.test_case.name,
            p.focal_class.name,
            p.focal_method.signature,
            std::string(focalforge::to_string(p.class_match)),
            std::string(focalforge::to_string(p.method_match))};
}

std::vector<std::string> valid_test_methods() {
    std::vector<std::string> out;
    for (const auto& p : fixture_pairs()) out.push_back(p.test_case.body_text);
    for (const auto& j : read_json_lines(fixture_dir() / "candidates" / "labeled.jsonl")) {
        if (j.at("label").at("syntax_ok").get<bool>()) out.push_back(j.at("text"));
    }
    return out;
}

// ---- generators -------------------------------------------------------------

std::vector<focalforge::MappedPair> random_corpus(std::mt19937_64& rng, std::size_t repos, std::size_t max_pairs) {
    std::uniform_int_distribution<std::size_t> size(1, max_pairs);
    std::vector<focalforge::MappedPair> out;
    for (std::size_t r = 0; r < repos; ++r) {
        const std::size_t n = size(rng);
        for (std::size_t k = 0; k < n; ++k) {
            focalforge::MappedPair p;
            p.repo_id = "repo" + std::to_string(r);
            p.pair_id = p.repo_id + ":" + std::to_string(k);
            p.test_class_name = "T" + std::to_string(r);
            p.test_case.name = "test" + std::to_string(k);
            p.test_case.body_text = "@Test void test" + std::to_string(k) + "() { f" + std::to_string(r) + "_" +
                                    std::to_string(k) + "(); }";
            p.focal_method.name = "f" + std::to_string(r) + "_" + std::to_string(k);
            p.focal_method.body_text = "int " + p.focal_method.name + "() { return " + std::to_string(k) + "; }";
            out.push_back(std::move(p));
        }
    }
    // Interleave repositories so that input order carries no grouping.
    std::shuffle(out.begin(), out.end(), rng);
    return out;
}

namespace {

std::string random_statements(std::mt19937_64& rng, int depth, std::size_t& counter);

std::string random_statement(std::mt19937_64& rng, int depth, std::size_t& counter) {
    const std::string k = std::to_string(counter++);
    std::uniform_int_distribution<int> pick(0, depth >= 2 ? 8 : 13);
    switch (pick(rng)) {
        case 0: return "int x" + k + " = calc.add(" + k + ", 2);";
        case 1: return "String s" + k + " = \"semi; {brace} " + k + "\";";
        case 2: return "assertEquals(" + k + ", calc.value(new int[] {1, 2}));";
        case 3: return "List<Map<String, Integer>> l" + k + " = new ArrayList<>();";
        case 4: return "int[] a" + k + " = {1, 2, " + k + "};";
        case 5: return "char c" + k + " = '}'; // trailing; comment {";
        case 6: return "assertTrue(\"x\".length() >= 1 && y" + k + ">>2 == 0);";
        case 7: return "/* block; } */ calc.reset();";
        case 8: return "fail(\"unreachable " + k + "\");";
        case 9: return "if (x > " + k + ") {" + random_statements(rng, depth + 1, counter) + "} else {" +
                       random_statements(rng, depth + 1, counter) + "}";
        case 10: return "for (int i = 0; i < " + k + "; i++) {" + random_statements(rng, depth + 1, counter) + "}";
        case 11: return "try {" + random_statements(rng, depth + 1, counter) + "} catch (IllegalStateException e) { e.printStackTrace(); }";
        case 12: return "Runnable r" + k + " = () -> {" + random_statements(rng, depth + 1, counter) + "};";
        default:
            return "Comparator<String> cmp" + k +
                   " = new Comparator<String>() { public int compare(String a, String b) { return a.length() - b.length(); } };";
    }
}

std::string random_statements(std::mt19937_64& rng, int depth, std::size_t& counter) {
    std::uniform_int_distribution<int> count(1, depth == 0 ? 8 : 3);
    std::string out;
    for (int n = count(rng); n > 0; --n) out += "\n" + std::string(4 * (depth + 1), ' ') + random_statement(rng, depth, counter);
    return out + "\n" + std::string(4 * depth, ' ');
}

}  // namespace

std::string random_test_method(std::mt19937_64& rng) {
    static const char* const headers[] = {"@Test\npublic void ", "@Test(timeout = 1000)\npublic void ",
                                          "@Test(expected = IllegalStateException.class)\nvoid ",
                                          "@Test\n@DisplayName(\"{odd}\")\npublic void "};
    std::uniform_int_distribution<int> header(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    std::size_t counter = 0;
    std::string out = headers[header(rng)];
    out += "generated" + std::to_string(rng() % 1000) + "()";
    if (coin(rng)) out += " throws Exception";
    out += " {" + random_statements(rng, 0, counter) + "}";
    return out;
}

std::string truncate_inside_body(const std::string& text, std::mt19937_64& rng) {
    // The header ends at the first `{` outside parentheses (annotation arguments may hold braces).
    int parens = 0;
    std::size_t open = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++parens;
        if (text[i] == ')') --parens;
        if (text[i] == '{' && parens == 0) {
            open = i;
            break;
        }
    }
    if (open == std::string::npos) throw std::invalid_argument("no method body");
    auto last = text.find_last_of('}');
    std::uniform_int_distribution<std::size_t> cut(open + 1, last - 1);
    return text.substr(0, cut(rng));
}

// ---- scripted runner --------------------------------------------------------

namespace {

std::string jvm_type(const std::string& t) {
    static const std::map<std::string, std::string> prim{{"int", "I"},  {"long", "J"},    {"double", "D"},
                                                         {"float", "F"}, {"boolean", "Z"}, {"char", "C"},
                                                         {"byte", "B"},  {"short", "S"}};
    if (auto it = prim.find(t); it != prim.end()) return it->second;
    if (t == "String") return "Ljava/lang/String;";
    return "L" + t + ";";
}

std::string last_word(const std::string& s) { return s.substr(s.find_last_of(' ') + 1); }

}  // namespace

std::string coverage_xml(const focalforge::FocalRef& focal, std::size_t hit_lines, bool include_focal) {
    std::string desc = "(";
    for (const auto& t : focal.parameter_types) desc += jvm_type(t);
    desc += ")V";
    std::string method = include_focal ? focal.method_name : "unrelatedHelper";
    std::string xml = "<?xml version=\"1.0\"?>\n<coverage><packages><package name=\"p\"><classes>\n";
    xml += "<class name=\"" + focal.class_name + "\" filename=\"F.java\"><methods>\n";
    xml += "<method name=\"" + method + "\" signature=\"" + desc + "\"><lines>\n";
    for (std::size_t i = 0; i < std::max<std::size_t>(3, hit_lines); ++i) {
        xml += "<line number=\"" + std::to_string(10 + i) + "\" hits=\"" + (i < hit_lines ? "2" : "0") + "\"/>\n";
    }
    xml += "</lines></method></methods></class>\n</classes></package></packages></coverage>\n";
    return xml;
}

focalforge::CommandExecutor ScriptedToolchain::executor() {
    return [this](const std::string& command, const fs::path& workdir, double) {
        const std::string id = last_word(command);
        const Script& s = scripts_.at(id);
        {
            std::lock_guard lock(mutex_);
            ++calls_[id];
        }
        focalforge::CommandResult r;
        const bool compiling = command.rfind("compile", 0) == 0;
        const Script::Step step = compiling ? s.compile : s.test;
        if (step == Script::Step::Timeout) {
            r.timed_out = true;
            r.exit_code = 137;
            return r;
        }
        r.exit_code = step == Script::Step::Fail ? 1 : 0;
        if (!compiling && step == Script::Step::Ok) {
            r.output = s.failure_in_output ? "Tests run: 2,  Failures: 1\n\nFAILURES!!!\n" : "OK (1 test)\n";
            if (s.coverage != Script::Coverage::None) {
                focalforge::FocalRef focal;
                focal.class_name = "p.Focal";
                focal.method_name = "target";
                focal.parameter_types = {"int"};
                std::ofstream out(workdir / "coverage.xml");
                out << coverage_xml(focal, s.coverage == Script::Coverage::FocalZero ? 0 : 2,
                                    s.coverage != Script::Coverage::OtherMethod);
            }
        }
        return r;
    };
}

std::size_t ScriptedToolchain::calls(const std::string& id) const {
    std::lock_guard lock(mutex_);
    auto it = calls_.find(id);
    return it == calls_.end() ? 0 : it->second;
}

focalforge::RunnerConfig ScriptedToolchain::runner(const fs::path& work_root) {
    focalforge::RunnerConfig cfg;
    cfg.compile_cmd = "compile {class_file} {candidate_id}";
    cfg.test_cmd = "test {workdir} {candidate_id}";
    cfg.coverage_report = "coverage.xml";
    cfg.timeout = 5;
    cfg.work_root = work_root;
    cfg.project = "stub";
    return cfg;
}

focalforge::VerdictCategory expected_category(bool parses, const Script& s) {
    using focalforge::VerdictCategory;
    if (!parses) return VerdictCategory::SyntaxError;
    if (s.compile != Script::Step::Ok) return VerdictCategory::BuildError;
    if (s.test != Script::Step::Ok || s.failure_in_output) return VerdictCategory::FailingTest;
    return VerdictCategory::PassingTest;
}

}  // namespace support
