#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace focalforge {

/// Version stamped on every record this toolkit writes.
inline constexpr int kSchemaVersion = 1;

class JsonlError : public std::runtime_error {
public:
    JsonlError(std::string path, std::size_t line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), path_(std::move(path)), line_(line) {}
    const std::string& path() const { return path_; }
    std::size_t line() const { return line_; }

private:
    std::string path_;
    std::size_t line_;
};

/// Reads one JSON object per line. Blank lines are skipped; any other line that
/// is not a complete JSON object raises JsonlError carrying its 1-based number.
/// When `require_schema` is set, every object must carry a matching `schema_version`.
std::vector<nlohmann::json> read_jsonl_values(const std::filesystem::path& path, bool require_schema = true);
std::vector<nlohmann::json> read_jsonl_values(std::istream& in, const std::string& name, bool require_schema = true);

void write_jsonl_values(const std::filesystem::path& path, const std::vector<nlohmann::json>& values);
void write_jsonl_values(std::ostream& out, const std::vector<nlohmann::json>& values);

template <class T>
std::vector<T> read_jsonl(const std::filesystem::path& path) {
    auto values = read_jsonl_values(path, true);
    std::vector<T> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        try {
            out.push_back(values[i].get<T>());
        } catch (const std::exception& e) {
            throw JsonlError(path.string(), i + 1, e.what());
        }
    }
    return out;
}

template <class T>
std::vector<nlohmann::json> to_json_values(const std::vector<T>& items) {
    std::vector<nlohmann::json> values;
    values.reserve(items.size());
    for (const auto& item : items) {
        nlohmann::json j = item;
        j["schema_version"] = kSchemaVersion;
        values.push_back(std::move(j));
    }
    return values;
}

template <class T>
void write_jsonl(const std::filesystem::path& path, const std::vector<T>& items) {
    write_jsonl_values(path, to_json_values(items));
}

}  // namespace focalforge
