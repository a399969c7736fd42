#include "focalforge/serialization.hpp"

namespace focalforge {

using nlohmann::json;

namespace {

template <class T>
void get_optional(const json& j, const char* key, T& out) {
    auto it = j.find(key);
    if (it != j.end() && !it->is_null()) it->get_to(out);
}

}  // namespace

void to_json(json& j, const Parameter& p) { j = json{{"type", p.type}, {"name", p.name}}; }

void from_json(const json& j, Parameter& p) {
    j.at("type").get_to(p.type);
    j.at("name").get_to(p.name);
}

void to_json(json& j, const MethodModel& m) {
    j = json{{"name", m.name},
             {"signature", m.signature},
             {"header", m.header},
             {"return_type", m.return_type},
             {"parameters", m.parameters},
             {"body", m.body_text},
             {"span", {m.span_begin, m.span_end}},
             {"annotations", m.annotations},
             {"invocations", m.invocations},
             {"invocation_arity", m.invocation_arity},
             {"modifiers", m.modifiers},
             {"is_constructor", m.is_constructor}};
}

void from_json(const json& j, MethodModel& m) {
    m = MethodModel{};
    j.at("name").get_to(m.name);
    j.at("body").get_to(m.body_text);
    get_optional(j, "signature", m.signature);
    get_optional(j, "header", m.header);
    get_optional(j, "return_type", m.return_type);
    get_optional(j, "parameters", m.parameters);
    if (auto it = j.find("span"); it != j.end() && it->is_array() && it->size() == 2) {
        m.span_begin = (*it)[0].get<std::size_t>();
        m.span_end = (*it)[1].get<std::size_t>();
    }
    get_optional(j, "annotations", m.annotations);
    get_optional(j, "invocations", m.invocations);
    get_optional(j, "invocation_arity", m.invocation_arity);
    get_optional(j, "modifiers", m.modifiers);
    get_optional(j, "is_constructor", m.is_constructor);
    if (m.invocation_arity.size() != m.invocations.size()) m.invocation_arity.assign(m.invocations.size(), -1);
}

void to_json(json& j, const FieldModel& f) {
    j = json{{"name", f.name},
             {"declared_type", f.declared_type},
             {"modifiers", f.modifiers},
             {"annotations", f.annotations}};
}

void from_json(const json& j, FieldModel& f) {
    f = FieldModel{};
    j.at("name").get_to(f.name);
    j.at("declared_type").get_to(f.declared_type);
    get_optional(j, "modifiers", f.modifiers);
    get_optional(j, "annotations", f.annotations);
}

void to_json(json& j, const MemberSignature& m) {
    j = json{{"name", m.name},
             {"signature", m.signature},
             {"header", m.header},
             {"modifiers", m.modifiers},
             {"is_constructor", m.is_constructor}};
}

void from_json(const json& j, MemberSignature& m) {
    m = MemberSignature{};
    j.at("name").get_to(m.name);
    j.at("header").get_to(m.header);
    get_optional(j, "signature", m.signature);
    get_optional(j, "modifiers", m.modifiers);
    get_optional(j, "is_constructor", m.is_constructor);
}

void to_json(json& j, const FocalClassSummary& c) {
    j = json{{"name", c.name},
             {"qualified_name", c.qualified_name},
             {"package", c.package_name},
             {"kind", to_string(c.kind)},
             {"methods", c.methods},
             {"fields", c.fields}};
}

void from_json(const json& j, FocalClassSummary& c) {
    c = FocalClassSummary{};
    j.at("name").get_to(c.name);
    get_optional(j, "qualified_name", c.qualified_name);
    get_optional(j, "package", c.package_name);
    if (auto it = j.find("kind"); it != j.end()) c.kind = class_kind_from_string(it->get<std::string>());
    get_optional(j, "methods", c.methods);
    get_optional(j, "fields", c.fields);
}

void to_json(json& j, const AttachedContext& c) {
    j = json{{"level", c.level}, {"text", c.text}, {"token_count", c.token_count}, {"truncated", c.truncated}};
}

void from_json(const json& j, AttachedContext& c) {
    c = AttachedContext{};
    j.at("level").get_to(c.level);
    j.at("text").get_to(c.text);
    get_optional(j, "token_count", c.token_count);
    get_optional(j, "truncated", c.truncated);
}

void to_json(json& j, const MappedPair& p) {
    j = json{{"pair_id", p.pair_id},
             {"repo_id", p.repo_id},
             {"test_class_path", p.test_class_path},
             {"test_class", p.test_class_name},
             {"test_case", p.test_case},
             {"focal_class_path", p.focal_class_path},
             {"focal_class", p.focal_class},
             {"focal_method", p.focal_method},
             {"class_match", to_string(p.class_match)},
             {"method_match", to_string(p.method_match)}};
    if (p.context) j["context"] = *p.context;
}

void from_json(const json& j, MappedPair& p) {
    p = MappedPair{};
    j.at("repo_id").get_to(p.repo_id);
    j.at("test_class_path").get_to(p.test_class_path);
    j.at("test_case").get_to(p.test_case);
    j.at("focal_class_path").get_to(p.focal_class_path);
    j.at("focal_method").get_to(p.focal_method);
    p.class_match = class_match_from_string(j.at("class_match").get<std::string>());
    p.method_match = method_match_from_string(j.at("method_match").get<std::string>());
    get_optional(j, "pair_id", p.pair_id);
    get_optional(j, "test_class", p.test_class_name);
    get_optional(j, "focal_class", p.focal_class);
    if (auto it = j.find("context"); it != j.end() && !it->is_null()) p.context = it->get<AttachedContext>();
    if (p.pair_id.empty()) p.pair_id = p.repo_id + ":" + p.test_class_path + ":" + p.test_case.name;
}

void to_json(json& j, const MiningReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"path", f.rel_path}, {"reason", f.reason}});
    j = json{{"repo_id", r.repo_id},
             {"files_seen", r.files_seen},
             {"files_parsed", r.files_parsed},
             {"parse_failures", r.parse_failures},
             {"classes", r.classes},
             {"test_classes", r.test_classes},
             {"test_cases", r.test_cases},
             {"pairs_mapped", r.pairs_mapped},
             {"discards", r.discards},
             {"failures", failures}};
}

}  // namespace focalforge
