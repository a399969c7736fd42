#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace focalforge {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat key/value file, a small TOML subset:
///
///     # comment
///     timeout = 60
///     compile_cmd = "javac -cp {classpath} {class_file}"
///     scaffold_template = """
///     multi-line text
///     """
///     [section]
///     key = 'literal string'
///
/// Keys under a `[section]` header are stored as `section.key`. Basic strings
/// understand the escapes \" \\ \n \t; literal and triple-quoted strings are
/// taken as is. Unquoted values (numbers, booleans) are kept as written.
class KeyValueFile {
public:
    static KeyValueFile parse(std::string_view text, const std::string& name = "<config>");
    static KeyValueFile load(const std::filesystem::path& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, std::string fallback) const;
    /// Throws ConfigError when present but not a number.
    std::optional<double> get_number(const std::string& key) const;
    std::optional<bool> get_bool(const std::string& key) const;

    const std::map<std::string, std::string>& values() const { return values_; }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    std::map<std::string, std::string> values_;
};

}  // namespace focalforge
