#include "focalforge/ingredients.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace focalforge;

namespace {

const MappedPair& calculator_add() {
    static const MappedPair pair = [] {
        for (auto& p : mine_repository(support::fixture_repos() / "calculator").pairs) {
            if (p.focal_method.name == "add") return p;
        }
        throw std::runtime_error("fixture pair missing");
    }();
    return pair;
}

}  // namespace

TEST(CodeTokens, DropsKeywordsAndOperators) {
    EXPECT_EQ(code_tokens("if (x > 0) return y;"), (TokenBag{"x", "0", "y"}));
    EXPECT_EQ(code_tokens("assertEquals(expected, actual)"), (TokenBag{"assertEquals", "expected", "actual"}));
    EXPECT_EQ(code_tokens("x = true ? null : false;"), (TokenBag{"x"}));
}

TEST(CodeTokens, LiteralsKeepTheirSpelling) {
    EXPECT_EQ(code_tokens("f(\"Discuss related works\", 'c', 1.5f)"),
              (TokenBag{"f", "\"Discuss related works\"", "'c'", "1.5f"}));
}

TEST(CodeTokens, HandTokenizedFixtureBody) {
    EXPECT_EQ(code_tokens(calculator_add().test_case.body_text),
              (TokenBag{"Test", "testAdd", "assertEquals", "5", "calc", "add", "2", "3"}));
    EXPECT_EQ(code_token_sequence(calculator_add().test_case.body_text),
              (std::vector<std::string>{"Test", "testAdd", "assertEquals", "5", "calc", "add", "2", "3"}));
}

TEST(CodeTokens, PermissiveOnFragments) {
    EXPECT_EQ(code_tokens("foo(\"open"), (TokenBag{"foo", "\"open"}));
}

TEST(SharedTokenCount, Basics) {
    EXPECT_EQ(shared_token_count("a b c", "d e"), 0u);
    const std::string body = calculator_add().test_case.body_text;
    EXPECT_EQ(shared_token_count(body, body), code_tokens(body).size());
    EXPECT_EQ(shared_token_count("a a b", "a b b c"), 2u);
    EXPECT_EQ(shared_token_count("a a b", "a b b c", OverlapMode::Multiset), 2u);
    EXPECT_EQ(shared_token_count("a a b", "a a b b c", OverlapMode::Multiset), 3u);
    EXPECT_EQ(shared_token_count("x.y(z)", "y + z"), shared_token_count("y + z", "x.y(z)"));
}

TEST(SharedTokenCount, CalculatorAddAtEachLevel) {
    const auto& p = calculator_add();
    // The test shares only `add` with the focal method.
    EXPECT_EQ(shared_token_count(render_context(p, ContextLevel::FM), p.test_case), 1u);
    EXPECT_EQ(shared_token_count(render_context(p, ContextLevel::FM_FC_C_M_F), p.test_case), 1u);
}

TEST(OverlapDistribution, SinglePair) {
    auto stats = overlap_distribution({calculator_add()}, {ContextLevel::FM});
    ASSERT_EQ(stats.rows.size(), 1u);
    const auto& s = stats.per_level.at(ContextLevel::FM);
    EXPECT_EQ(s.n, 1u);
    EXPECT_DOUBLE_EQ(s.median, 1.0);
    EXPECT_DOUBLE_EQ(s.mean, 1.0);
}

TEST(OverlapDistribution, RowsAreLevelMajorAndOutputsAreStable) {
    auto pairs = mine_repository(support::fixture_repos() / "text").pairs;
    std::vector<ContextLevel> levels(std::begin(kAllLevels), std::end(kAllLevels));
    auto stats = overlap_distribution(pairs, levels);
    ASSERT_EQ(stats.rows.size(), pairs.size() * 5);
    EXPECT_EQ(stats.rows[0].level, ContextLevel::FM);
    EXPECT_EQ(stats.rows[pairs.size()].level, ContextLevel::FM_FC);

    std::ostringstream csv;
    stats.write_csv(csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    EXPECT_EQ(header, "level,pair_id,shared_tokens");
    std::size_t n = 0;
    for (std::string line; std::getline(lines, line);) ++n;
    EXPECT_EQ(n, stats.rows.size());

    auto j = stats.to_json();
    EXPECT_TRUE(j.contains("levels"));
    OverlapOptions parallel;
    parallel.jobs = 4;
    EXPECT_EQ(overlap_distribution(pairs, levels, parallel).to_json(), j);
}

TEST(OverlapDistribution, FullRenderingIgnoresBudget) {
    const auto& p = calculator_add();
    OverlapOptions tiny;
    tiny.budget = 2;
    auto cut = overlap_distribution({p}, {ContextLevel::FM}, tiny);
    EXPECT_EQ(cut.rows[0].shared_tokens, 0u);
    tiny.truncate = false;
    auto full = overlap_distribution({p}, {ContextLevel::FM}, tiny);
    EXPECT_EQ(full.rows[0].shared_tokens, 1u);
}
