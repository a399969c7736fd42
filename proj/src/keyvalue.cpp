#include "focalforge/keyvalue.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace focalforge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool valid_key(std::string_view k) {
    if (k.empty()) return false;
    for (char c : k) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
    }
    return true;
}

// Drops a trailing `# comment` that sits outside any quotes.
std::string_view strip_comment(std::string_view s) {
    char quote = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (quote) {
            if (c == '\\' && quote == '"') ++i;
            else if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '#') {
            return s.substr(0, i);
        }
    }
    return s;
}

}  // namespace

KeyValueFile KeyValueFile::parse(std::string_view text, const std::string& name) {
    KeyValueFile f;
    f.name_ = name;
    std::string section;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) { throw ConfigError(name + ":" + std::to_string(line_no) + ": " + msg); };
    auto next_line = [&](std::string_view& out) {
        if (pos > text.size()) return false;
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        out = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        return true;
    };

    std::string_view raw;
    while (next_line(raw)) {
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            line = trim(strip_comment(line));
            if (line.back() != ']') fail("unterminated section header");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (!valid_key(section)) fail("bad section name '" + section + "'");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string_view::npos) fail("expected key = value");
        std::string key(trim(line.substr(0, eq)));
        if (!valid_key(key)) fail("bad key '" + key + "'");
        if (!section.empty()) key = section + "." + key;
        auto rest = trim(line.substr(eq + 1));
        std::string value;

        if (rest.starts_with("\"\"\"") || rest.starts_with("'''")) {
            const std::string delim(rest.substr(0, 3));
            rest.remove_prefix(3);
            auto close = rest.find(delim);
            if (close != std::string_view::npos) {
                value = std::string(rest.substr(0, close));
            } else {
                // A newline right after the opening delimiter is not part of the value.
                bool first = true;
                if (!trim(rest).empty()) {
                    value = std::string(rest);
                    first = false;
                }
                bool closed = false;
                std::string_view more;
                while (next_line(more)) {
                    auto c = more.find(delim);
                    if (!first) value += '\n';
                    first = false;
                    if (c != std::string_view::npos) {
                        value += std::string(more.substr(0, c));
                        closed = true;
                        break;
                    }
                    value += std::string(more);
                }
                if (!closed) fail("unterminated multi-line string");
                // Closing delimiter on its own line leaves a trailing newline.
            }
        } else if (!rest.empty() && rest.front() == '"') {
            std::size_t i = 1;
            bool closed = false;
            for (; i < rest.size(); ++i) {
                char c = rest[i];
                if (c == '"') {
                    closed = true;
                    break;
                }
                if (c == '\\' && i + 1 < rest.size()) {
                    char e = rest[++i];
                    switch (e) {
                        case 'n': value += '\n'; break;
                        case 't': value += '\t'; break;
                        case '"': value += '"'; break;
                        case '\\': value += '\\'; break;
                        default: fail(std::string("unknown escape \\") + e);
                    }
                    continue;
                }
                value += c;
            }
            if (!closed) fail("unterminated string");
            if (!trim(strip_comment(rest.substr(i + 1))).empty()) fail("trailing characters after string");
        } else if (!rest.empty() && rest.front() == '\'') {
            auto close = rest.find('\'', 1);
            if (close == std::string_view::npos) fail("unterminated string");
            value = std::string(rest.substr(1, close - 1));
            if (!trim(strip_comment(rest.substr(close + 1))).empty()) fail("trailing characters after string");
        } else {
            value = std::string(trim(strip_comment(rest)));
            if (value.empty()) fail("missing value for '" + key + "'");
        }
        if (f.values_.count(key)) fail("duplicate key '" + key + "'");
        f.values_[key] = std::move(value);
    }
    return f;
}

KeyValueFile KeyValueFile::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

std::optional<std::string> KeyValueFile::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

std::string KeyValueFile::get_or(const std::string& key, std::string fallback) const {
    auto v = get(key);
    return v ? *v : std::move(fallback);
}

std::optional<double> KeyValueFile::get_number(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    double d = 0;
    auto [ptr, ec] = std::from_chars(v->data(), v->data() + v->size(), d);
    if (ec != std::errc{} || ptr != v->data() + v->size()) {
        throw ConfigError(name_ + ": '" + key + "' must be a number, got '" + *v + "'");
    }
    return d;
}

std::optional<bool> KeyValueFile::get_bool(const std::string& key) const {
    auto v = get(key);
    if (!v) return std::nullopt;
    if (*v == "true") return true;
    if (*v == "false") return false;
    throw ConfigError(name_ + ": '" + key + "' must be true or false, got '" + *v + "'");
}

}  // namespace focalforge
