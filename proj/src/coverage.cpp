#include "focalforge/coverage.hpp"

#include "focalforge/validator.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace focalforge {

namespace pt = boost::property_tree;

namespace {

std::size_t parse_count(const std::string& s) {
    std::size_t v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    while (b < e && *b == ' ') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{}) return 0;
    (void)ptr;
    return v;
}

// `50% (1/2)` -> {1, 2}
std::pair<std::size_t, std::size_t> parse_condition_coverage(const std::string& s) {
    auto open = s.find('(');
    auto slash = s.find('/', open == std::string::npos ? 0 : open);
    auto close = s.find(')', slash == std::string::npos ? 0 : slash);
    if (open == std::string::npos || slash == std::string::npos || close == std::string::npos) return {0, 0};
    return {parse_count(s.substr(open + 1, slash - open - 1)), parse_count(s.substr(slash + 1, close - slash - 1))};
}

std::string attr(const pt::ptree& node, const char* name) {
    return node.get<std::string>(std::string("<xmlattr>.") + name, "");
}

void collect_method(const pt::ptree& method, const std::string& file, const std::string& cls,
                    std::vector<CoverageRecord>& out) {
    CoverageRecord r;
    r.file = file;
    r.class_name = cls;
    r.method_name = attr(method, "name");
    r.descriptor = attr(method, "signature");
    if (auto lines = method.get_child_optional("lines")) {
        for (const auto& [tag, line] : *lines) {
            if (tag != "line") continue;
            ++r.lines_total;
            const auto hits = attr(line, "hits");
            if (hits.find_first_of("123456789") != std::string::npos && hits.find('-') == std::string::npos) {
                ++r.lines_covered;
            }
            const auto cc = attr(line, "condition-coverage");
            if (!cc.empty()) {
                auto [covered, total] = parse_condition_coverage(cc);
                r.conditions_covered += covered;
                r.conditions_total += total;
            }
        }
    }
    out.push_back(std::move(r));
}

void walk(const pt::ptree& node, std::vector<CoverageRecord>& out) {
    for (const auto& [tag, child] : node) {
        if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
        if (tag == "class") {
            const auto file = attr(child, "filename");
            const auto cls = attr(child, "name");
            if (auto methods = child.get_child_optional("methods")) {
                for (const auto& [mtag, method] : *methods) {
                    if (mtag == "method") collect_method(method, file, cls, out);
                }
            }
            continue;
        }
        walk(child, out);
    }
}

std::vector<CoverageRecord> parse_stream(std::istream& in, const std::string& name) {
    pt::ptree tree;
    try {
        pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
        throw CoverageError(name + ": malformed XML: " + e.message() + " at line " + std::to_string(e.line()));
    }
    if (tree.find("coverage") == tree.not_found()) throw CoverageError(name + ": missing <coverage> root element");
    std::vector<CoverageRecord> out;
    walk(tree, out);
    return out;
}

std::string strip_generics(std::string_view s) {
    std::string out;
    int depth = 0;
    for (char c : s) {
        if (c == '<') ++depth;
        else if (c == '>') depth = std::max(depth - 1, 0);
        else if (depth == 0) out += c;
    }
    return out;
}

}  // namespace

std::string CoverageRecord::signature() const {
    std::string s = method_name + "(";
    try {
        auto types = descriptor_parameter_types(descriptor);
        for (std::size_t i = 0; i < types.size(); ++i) {
            if (i) s += ", ";
            s += types[i];
        }
    } catch (const CoverageError&) {
        s += "?";
    }
    return s + ")";
}

std::vector<CoverageRecord> parse_coverage_xml_string(const std::string& xml, const std::string& name) {
    std::istringstream in(xml);
    return parse_stream(in, name);
}

std::vector<CoverageRecord> parse_coverage_xml(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CoverageError("cannot open " + path.string());
    return parse_stream(in, path.string());
}

std::vector<std::string> descriptor_parameter_types(std::string_view d) {
    if (d.empty() || d.front() != '(') throw CoverageError("bad method descriptor '" + std::string(d) + "'");
    std::vector<std::string> out;
    std::size_t i = 1;
    while (i < d.size() && d[i] != ')') {
        int dims = 0;
        while (i < d.size() && d[i] == '[') {
            ++dims;
            ++i;
        }
        if (i >= d.size()) break;
        std::string base;
        switch (d[i]) {
            case 'B': base = "byte"; break;
            case 'C': base = "char"; break;
            case 'D': base = "double"; break;
            case 'F': base = "float"; break;
            case 'I': base = "int"; break;
            case 'J': base = "long"; break;
            case 'S': base = "short"; break;
            case 'Z': base = "boolean"; break;
            case 'L': {
                auto semi = d.find(';', i);
                if (semi == std::string_view::npos) throw CoverageError("bad method descriptor '" + std::string(d) + "'");
                auto full = d.substr(i + 1, semi - i - 1);
                auto cut = full.find_last_of("/$");
                base = std::string(cut == std::string_view::npos ? full : full.substr(cut + 1));
                i = semi;
                break;
            }
            default: throw CoverageError("bad method descriptor '" + std::string(d) + "'");
        }
        ++i;
        for (int k = 0; k < dims; ++k) base += "[]";
        out.push_back(std::move(base));
    }
    if (i >= d.size()) throw CoverageError("bad method descriptor '" + std::string(d) + "'");
    return out;
}

std::string simple_type_name(std::string_view type) {
    std::string t = strip_generics(type);
    // Drop annotations and `final`.
    std::string cleaned;
    std::istringstream words(t);
    std::string w;
    while (words >> w) {
        if (w == "final" || w.front() == '@') continue;
        cleaned += w;
    }
    std::string suffix;
    while (cleaned.size() >= 2 && cleaned.ends_with("[]")) {
        suffix += "[]";
        cleaned.resize(cleaned.size() - 2);
    }
    if (cleaned.ends_with("...")) {
        suffix += "[]";
        cleaned.resize(cleaned.size() - 3);
    }
    auto dot = cleaned.find_last_of(".$");
    if (dot != std::string::npos) cleaned = cleaned.substr(dot + 1);
    return cleaned + suffix;
}

std::vector<const CoverageRecord*> match_focal_coverage(const std::vector<CoverageRecord>& records,
                                                        const FocalRef& focal) {
    auto class_matches = [&](const CoverageRecord& r) {
        if (focal.class_name.empty()) return true;
        std::string rc = r.class_name;
        std::replace(rc.begin(), rc.end(), '$', '.');
        std::replace(rc.begin(), rc.end(), '/', '.');
        if (rc == focal.class_name) return true;
        // Unqualified focal class: compare the trailing simple name.
        if (focal.class_name.find('.') == std::string::npos) {
            auto dot = rc.find_last_of('.');
            return (dot == std::string::npos ? rc : rc.substr(dot + 1)) == focal.class_name;
        }
        return false;
    };

    std::vector<const CoverageRecord*> named;
    for (const auto& r : records) {
        if (r.method_name == focal.method_name && class_matches(r)) named.push_back(&r);
    }
    std::vector<std::string> want;
    for (const auto& p : focal.parameter_types) want.push_back(simple_type_name(p));

    std::vector<const CoverageRecord*> exact, same_arity;
    for (const auto* r : named) {
        std::vector<std::string> got;
        try {
            got = descriptor_parameter_types(r->descriptor);
        } catch (const CoverageError&) {
            continue;
        }
        if (got.size() != want.size()) continue;
        same_arity.push_back(r);
        if (got == want) exact.push_back(r);
    }
    if (!exact.empty()) return exact;
    if (same_arity.size() == 1) return same_arity;
    if (named.size() == 1) return named;
    return {};
}

}  // namespace focalforge
