#pragma once

#include "focalforge/code_model.hpp"

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

enum class ClassMatch { Path, Name };
enum class MethodMatch { Name, UniqueCall };

std::string_view to_string(ClassMatch m);
std::string_view to_string(MethodMatch m);
ClassMatch class_match_from_string(std::string_view s);
MethodMatch method_match_from_string(std::string_view s);

/// Member declarations of a focal class, enough to render its focal context
/// without carrying every method body around.
struct MemberSignature {
    std::string name;
    std::string signature;
    std::string header;
    std::vector<std::string> modifiers;
    bool is_constructor{false};

    bool operator==(const MemberSignature&) const = default;
};

struct FocalClassSummary {
    std::string name;
    std::string qualified_name;
    std::string package_name;
    ClassKind kind{ClassKind::Class};
    std::vector<MemberSignature> methods;  // source order, constructors included
    std::vector<FieldModel> fields;

    static FocalClassSummary from(const ClassModel& cls);

    /// Interface and annotation members are implicitly public unless declared private.
    bool member_is_public(const std::vector<std::string>& modifiers) const;

    bool operator==(const FocalClassSummary&) const = default;
};

/// A focal-context rendering carried along with a pair in `render` output.
struct AttachedContext {
    std::string level;
    std::string text;
    std::size_t token_count{0};
    bool truncated{false};

    bool operator==(const AttachedContext&) const = default;
};

/// One test case bound to its focal method.
struct MappedPair {
    std::string pair_id;
    std::string repo_id;
    std::string test_class_path;
    std::string test_class_name;  // qualified
    MethodModel test_case;
    std::string focal_class_path;
    FocalClassSummary focal_class;
    MethodModel focal_method;
    ClassMatch class_match{ClassMatch::Path};
    MethodMatch method_match{MethodMatch::Name};
    std::optional<AttachedContext> context;

    bool operator==(const MappedPair&) const = default;
};

// Discard reasons recorded in MiningReport::discards.
inline constexpr std::string_view kNoFocalClass = "no_focal_class";
inline constexpr std::string_view kAmbiguousFocalClass = "ambiguous_focal_class";
inline constexpr std::string_view kNoFocalMethod = "no_name_match_no_unique_call";
inline constexpr std::string_view kOverloadAmbiguous = "overload_ambiguous";
inline constexpr std::string_view kConstructorFocal = "constructor_focal";

struct FileFailure {
    std::string rel_path;
    std::string reason;
};

struct MiningReport {
    std::string repo_id;
    std::size_t files_seen{0};
    std::size_t files_parsed{0};
    std::size_t parse_failures{0};
    std::size_t classes{0};
    std::size_t test_classes{0};
    std::size_t test_cases{0};
    std::size_t pairs_mapped{0};
    std::map<std::string, std::size_t> discards;
    std::vector<FileFailure> failures;

    void merge(const MiningReport& other);
};

struct MiningResult {
    std::vector<MappedPair> pairs;
    MiningReport report;
};

/// Classes that declare at least one `@Test` method, in input order.
std::vector<ClassModel> find_test_classes(std::span<const ClassModel> repo);

/// `FooTest` -> {`Foo`}, `TestFoo` -> {`Foo`}; suffix form first. Empty when neither applies.
std::vector<std::string> strip_test_affixes(std::string_view class_name);

/// `src/test/java/a/FooTest.java` with `Foo` -> `src/main/java/a/Foo.java`; nullopt when
/// the path has no `src/test` segment.
std::optional<std::string> mirrored_main_path(std::string_view test_path, std::string_view focal_name);

struct ClassResolution {
    const ClassModel* focal{nullptr};
    ClassMatch match{ClassMatch::Path};
    std::string discard_reason;
    std::string ambiguous_name;
    std::size_t candidates{0};
};

/// Path matching against the mirrored `src/main` location first, then
/// repository-wide name matching that requires a unique candidate.
ClassResolution match_focal_class(const ClassModel& test_class, std::span<const ClassModel> repo);

struct MethodResolution {
    const MethodModel* focal{nullptr};
    MethodMatch match{MethodMatch::Name};
    std::string discard_reason;
};

/// Name matching on the test name without a `test`/`Test` affix, then the
/// unique-method-call heuristic.
MethodResolution match_focal_method(const MethodModel& test_case, const ClassModel& focal_class);

/// Runs the heuristics over already-parsed files. `files` need not be sorted.
MiningResult mine_sources(const std::vector<SourceFile>& files, int jobs = 1);

/// Reads every `.java` file under `root` (repo_id defaults to the directory name).
MiningResult mine_repository(const std::filesystem::path& root, std::string repo_id = {}, int jobs = 1);

/// Mines every immediate subdirectory of `root` as an independent repository,
/// in parallel; results are concatenated in directory-name order.
MiningResult mine_repositories(const std::filesystem::path& root, int jobs = 1);

}  // namespace focalforge
