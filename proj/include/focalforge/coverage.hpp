#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

struct FocalRef;

/// Coverage of one `<method>` element of a Cobertura-style report.
struct CoverageRecord {
    std::string file;        // `filename` of the enclosing class
    std::string class_name;  // dotted, `$` for nested classes
    std::string method_name;
    std::string descriptor;  // JVM descriptor, e.g. `(Ljava/lang/String;I)Z`
    std::size_t lines_total{0};
    std::size_t lines_covered{0};  // line elements with hits > 0
    std::size_t conditions_total{0};
    std::size_t conditions_covered{0};  // numerators of `condition-coverage="50% (1/2)"`

    /// `isDigits(String)`: parameter types reduced to simple names.
    std::string signature() const;
    bool operator==(const CoverageRecord&) const = default;
};

class CoverageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<CoverageRecord> parse_coverage_xml(const std::filesystem::path& path);
std::vector<CoverageRecord> parse_coverage_xml_string(const std::string& xml, const std::string& name = "<string>");

/// `(Ljava/lang/String;I[J)Z` -> {"String", "int", "long[]"}. Throws CoverageError.
std::vector<std::string> descriptor_parameter_types(std::string_view descriptor);

/// `final java.util.List<String>` -> `List`, `T...` -> `T[]`.
std::string simple_type_name(std::string_view type);

/// Records that belong to the focal method: exact class and simple-typed parameter
/// match first, then a unique method of that name and arity, then a unique method
/// of that name.
std::vector<const CoverageRecord*> match_focal_coverage(const std::vector<CoverageRecord>& records,
                                                        const FocalRef& focal);

}  // namespace focalforge
