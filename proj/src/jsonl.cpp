#include "focalforge/jsonl.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace focalforge {

std::vector<nlohmann::json> read_jsonl_values(std::istream& in, const std::string& name, bool require_schema) {
    std::vector<nlohmann::json> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        nlohmann::json value;
        try {
            value = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw JsonlError(name, number, std::string("malformed JSON: ") + e.what());
        }
        if (!value.is_object()) throw JsonlError(name, number, "expected a JSON object");
        if (require_schema) {
            auto it = value.find("schema_version");
            if (it == value.end()) throw JsonlError(name, number, "missing schema_version");
            if (!it->is_number_integer() || it->get<int>() != kSchemaVersion) {
                throw JsonlError(name, number,
                                 "schema_version mismatch: expected " + std::to_string(kSchemaVersion) + ", found " +
                                     it->dump());
            }
        }
        out.push_back(std::move(value));
    }
    return out;
}

std::vector<nlohmann::json> read_jsonl_values(const std::filesystem::path& path, bool require_schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_jsonl_values(in, path.string(), require_schema);
}

void write_jsonl_values(std::ostream& out, const std::vector<nlohmann::json>& values) {
    for (const auto& v : values) out << v.dump() << '\n';
}

void write_jsonl_values(const std::filesystem::path& path, const std::vector<nlohmann::json>& values) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_jsonl_values(out, values);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace focalforge
