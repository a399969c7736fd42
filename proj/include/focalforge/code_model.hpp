#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

/// One `.java` file of a repository.
struct SourceFile {
    std::string repo_id;
    std::string rel_path;  // forward slashes
    std::string content;
};

struct Parameter {
    std::string type;  // as written, including varargs `...`
    std::string name;

    bool operator==(const Parameter&) const = default;
};

struct MethodModel {
    std::string name;
    // Return type and parameter types, e.g. `int add(int, int)`; constructors omit the return type.
    std::string signature;
    // Declaration header without the body: modifiers, type parameters, return type, name,
    // parameters and throws clause, whitespace-collapsed.
    std::string header;
    std::string return_type;
    std::vector<Parameter> parameters;
    std::string body_text;  // verbatim declaration slice, annotations included
    std::size_t span_begin{0};
    std::size_t span_end{0};
    std::vector<std::string> annotations;  // names as written, without arguments
    std::vector<std::string> invocations;  // callee simple names, source order
    std::vector<int> invocation_arity;     // parallel to `invocations`
    std::vector<std::string> modifiers;    // source order
    bool is_constructor{false};

    bool has_modifier(std::string_view m) const;
    bool is_public() const { return has_modifier("public"); }
    bool is_varargs() const;

    bool operator==(const MethodModel&) const = default;
};

struct FieldModel {
    std::string name;
    std::string declared_type;  // dims after the declarator name are folded in
    std::vector<std::string> modifiers;
    std::vector<std::string> annotations;

    bool has_modifier(std::string_view m) const;
    bool is_public() const { return has_modifier("public"); }
    /// `public static int x;`
    std::string declaration() const;

    bool operator==(const FieldModel&) const = default;
};

enum class ClassKind { Class, Interface, Enum, Record, Annotation };

std::string_view to_string(ClassKind kind);
ClassKind class_kind_from_string(std::string_view s);

struct ClassModel {
    std::string name;
    std::string qualified_name;  // package.Outer.Inner
    std::string package_name;
    std::string rel_path;
    ClassKind kind{ClassKind::Class};
    std::vector<std::string> modifiers;
    std::vector<MethodModel> methods;  // constructors included, source order
    std::vector<FieldModel> fields;
    bool is_nested{false};

    bool operator==(const ClassModel&) const = default;
};

/// A file the Java grammar rejects. Callers count and skip it.
class ParseFailure : public std::runtime_error {
public:
    ParseFailure(std::string path, std::string reason)
        : std::runtime_error(path + ": " + reason), path_(std::move(path)), reason_(std::move(reason)) {}
    const std::string& path() const { return path_; }
    const std::string& reason() const { return reason_; }

private:
    std::string path_;
    std::string reason_;
};

/// Parses one compilation unit. Every named class, interface, enum, record and
/// annotation type (nested and local ones included) yields a ClassModel, outer
/// declarations before the ones they contain. Anonymous class bodies are not
/// modeled; calls made inside them count toward the enclosing method.
///
/// Throws ParseFailure when the file is not valid Java.
std::vector<ClassModel> parse_file(const SourceFile& file);

/// Parses `source` and returns the first diagnostic, or an empty string when it is valid Java.
std::string syntax_diagnostic(std::string_view source);

/// `org.junit.Test(timeout = 4000)` -> `Test`
std::string annotation_simple_name(std::string_view annotation);

/// True iff one of the method's annotations has the simple name `Test`.
bool is_test_method(const MethodModel& m);

bool is_test_class(const ClassModel& c);

}  // namespace focalforge
