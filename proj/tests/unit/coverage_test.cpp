#include "focalforge/coverage.hpp"
#include "focalforge/validator.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace focalforge;

TEST(ParseCoverage, HandComputedFixtures) {
    const auto expected = support::read_json(support::fixture_dir() / "coverage" / "expected.json");
    ASSERT_EQ(expected.size(), 5u);
    for (const auto& [file, records] : expected.items()) {
        SCOPED_TRACE(file);
        auto got = parse_coverage_xml(support::fixture_dir() / "coverage" / file);
        ASSERT_EQ(got.size(), records.size());
        for (std::size_t i = 0; i < got.size(); ++i) {
            const auto& e = records[i];
            EXPECT_EQ(got[i].class_name, e.at("class"));
            EXPECT_EQ(got[i].method_name, e.at("method"));
            EXPECT_EQ(got[i].signature(), e.at("signature"));
            EXPECT_EQ(got[i].lines_total, e.at("lines_total"));
            EXPECT_EQ(got[i].lines_covered, e.at("lines_covered"));
            EXPECT_EQ(got[i].conditions_total, e.at("conditions_total"));
            EXPECT_EQ(got[i].conditions_covered, e.at("conditions_covered"));
        }
    }
}

TEST(ParseCoverage, FileNameComesFromEnclosingClass) {
    auto got = parse_coverage_xml(support::fixture_dir() / "coverage" / "multi_class.xml");
    EXPECT_EQ(got.front().file, "q/Queue.java");
    EXPECT_EQ(got.back().file, "q/util/Stack.java");
}

TEST(ParseCoverage, MalformedInputIsAnError) {
    EXPECT_THROW(parse_coverage_xml_string("<coverage><packages>"), CoverageError);
    EXPECT_THROW(parse_coverage_xml_string("<report/>"), CoverageError);
    EXPECT_THROW(parse_coverage_xml(support::fixture_dir() / "coverage" / "absent.xml"), CoverageError);
    EXPECT_TRUE(parse_coverage_xml_string("<coverage/>").empty());
}

TEST(Descriptor, ParameterTypes) {
    EXPECT_EQ(descriptor_parameter_types("(Ljava/lang/String;I[J)Z"),
              (std::vector<std::string>{"String", "int", "long[]"}));
    EXPECT_EQ(descriptor_parameter_types("()V"), std::vector<std::string>{});
    EXPECT_EQ(descriptor_parameter_types("(Lq/Queue$Node;[[D)V"), (std::vector<std::string>{"Node", "double[][]"}));
    EXPECT_THROW(descriptor_parameter_types("(Ljava/lang/String"), CoverageError);
    EXPECT_THROW(descriptor_parameter_types("I"), CoverageError);
}

TEST(Descriptor, SimpleTypeNames) {
    EXPECT_EQ(simple_type_name("final java.util.List<String>"), "List");
    EXPECT_EQ(simple_type_name("T..."), "T[]");
    EXPECT_EQ(simple_type_name("java.util.Map.Entry<K, V>[]"), "Entry[]");
    EXPECT_EQ(simple_type_name("int"), "int");
}

TEST(MatchFocalCoverage, ExactOverload) {
    auto records = parse_coverage_xml(support::fixture_dir() / "coverage" / "overloads.xml");
    auto m = match_focal_coverage(records, FocalRef{"fmt.Formatter", "fmt", "format", {"String", "Object"}});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0]->lines_covered, 2u);
    m = match_focal_coverage(records, FocalRef{"fmt.Formatter", "fmt", "format", {"final String"}});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0]->lines_covered, 0u);
}

TEST(MatchFocalCoverage, Fallbacks) {
    auto records = parse_coverage_xml(support::fixture_dir() / "coverage" / "overloads.xml");
    // Unknown parameter spelling: unique by arity.
    auto m = match_focal_coverage(records, FocalRef{"fmt.Formatter", "fmt", "pad", {"CharSequence", "int"}});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0]->method_name, "pad");
    // Two overloads of arity 1 would be needed to decide; none matches so nothing is returned.
    m = match_focal_coverage(records, FocalRef{"fmt.Formatter", "fmt", "format", {"int", "int", "int"}});
    EXPECT_TRUE(m.empty());
    // Other class: nothing.
    m = match_focal_coverage(records, FocalRef{"fmt.Other", "fmt", "pad", {"String", "int"}});
    EXPECT_TRUE(m.empty());
}

TEST(MatchFocalCoverage, SameMethodNameInOtherClassIsIgnored) {
    auto records = parse_coverage_xml(support::fixture_dir() / "coverage" / "multi_class.xml");
    auto m = match_focal_coverage(records, FocalRef{"q.util.Stack", "q.util", "pop", {}});
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0]->lines_covered, 1u);
    EXPECT_EQ(m[0]->conditions_covered, 1u);
}
