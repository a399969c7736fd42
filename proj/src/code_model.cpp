#include "focalforge/code_model.hpp"

#include <algorithm>

namespace focalforge {

bool MethodModel::has_modifier(std::string_view m) const {
    return std::find(modifiers.begin(), modifiers.end(), m) != modifiers.end();
}

bool MethodModel::is_varargs() const {
    return !parameters.empty() && parameters.back().type.find("...") != std::string::npos;
}

bool FieldModel::has_modifier(std::string_view m) const {
    return std::find(modifiers.begin(), modifiers.end(), m) != modifiers.end();
}

std::string FieldModel::declaration() const {
    std::string out;
    for (const auto& m : modifiers) out += m + " ";
    out += declared_type + " " + name + ";";
    return out;
}

std::string_view to_string(ClassKind kind) {
    switch (kind) {
        case ClassKind::Class: return "class";
        case ClassKind::Interface: return "interface";
        case ClassKind::Enum: return "enum";
        case ClassKind::Record: return "record";
        case ClassKind::Annotation: return "annotation";
    }
    return "class";
}

ClassKind class_kind_from_string(std::string_view s) {
    if (s == "interface") return ClassKind::Interface;
    if (s == "enum") return ClassKind::Enum;
    if (s == "record") return ClassKind::Record;
    if (s == "annotation") return ClassKind::Annotation;
    return ClassKind::Class;
}

std::string annotation_simple_name(std::string_view annotation) {
    if (!annotation.empty() && annotation.front() == '@') annotation.remove_prefix(1);
    if (auto paren = annotation.find('('); paren != std::string_view::npos) annotation = annotation.substr(0, paren);
    while (!annotation.empty() && annotation.back() == ' ') annotation.remove_suffix(1);
    if (auto dot = annotation.rfind('.'); dot != std::string_view::npos) annotation.remove_prefix(dot + 1);
    return std::string(annotation);
}

bool is_test_method(const MethodModel& m) {
    return std::any_of(m.annotations.begin(), m.annotations.end(),
                       [](const std::string& a) { return annotation_simple_name(a) == "Test"; });
}

bool is_test_class(const ClassModel& c) { return std::any_of(c.methods.begin(), c.methods.end(), is_test_method); }

}  // namespace focalforge
