#pragma once

#include "focalforge/repo_miner.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

enum class ContextLevel { FM, FM_FC, FM_FC_C, FM_FC_C_M, FM_FC_C_M_F };

enum class ContentKind {
    FocalMethod,
    ClassName,
    ConstructorSignatures,
    PublicMethodSignatures,
    PublicFieldDeclarations,
};

inline constexpr ContextLevel kAllLevels[] = {ContextLevel::FM, ContextLevel::FM_FC, ContextLevel::FM_FC_C,
                                              ContextLevel::FM_FC_C_M, ContextLevel::FM_FC_C_M_F};

inline constexpr std::size_t kDefaultBudget = 1024;

/// `fm`, `fm+fc`, `fm+fc+c`, `fm+fc+c+m`, `fm+fc+c+m+f`
std::string_view level_id(ContextLevel level);
/// Inverse of level_id; nullopt for anything else.
std::optional<ContextLevel> parse_level(std::string_view id);
/// `all` or a comma-separated list of level ids. Throws std::invalid_argument.
std::vector<ContextLevel> parse_level_list(std::string_view spec);

std::string_view to_string(ContentKind kind);

/// Content kinds a level includes, in inclusion order.
std::vector<ContentKind> level_contents(ContextLevel level);

enum class TokenStrategy {
    Lexical,     // Java lexical tokens
    Whitespace,  // whitespace-separated words
};

std::optional<TokenStrategy> parse_token_strategy(std::string_view s);

/// Number of tokens `text` holds under `strategy`.
std::size_t count_tokens(std::string_view text, TokenStrategy strategy = TokenStrategy::Lexical);

struct ContextRendering {
    ContextLevel level{ContextLevel::FM};
    std::string text;
    std::size_t token_count{0};
    bool truncated{false};
    std::size_t full_token_count{0};  // before truncation
    std::size_t focal_tokens{0};      // focal-method tokens that survived

    AttachedContext attached() const { return {std::string(level_id(level)), text, token_count, truncated}; }
};

/// Renders the focal method with the context `level` adds, laid out on one line as
/// `ClassName { focal_method ctor_sig; method_sig; field_decl; }`. When the rendering
/// holds more than `budget` tokens, tokens are kept in priority order: the focal
/// method, the class-name wrapper, constructors, other public methods, public fields.
/// Cuts fall on token boundaries. `budget` must be at least 1.
ContextRendering render_context(const MappedPair& pair, ContextLevel level, std::size_t budget = kDefaultBudget,
                                TokenStrategy strategy = TokenStrategy::Lexical);

/// The untruncated rendering text.
std::string full_context_text(const MappedPair& pair, ContextLevel level);

}  // namespace focalforge
