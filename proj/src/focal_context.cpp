#include "focalforge/focal_context.hpp"

#include "focalforge/java_lexer.hpp"

#include <algorithm>
#include <stdexcept>

namespace focalforge {

namespace {

struct Word {
    std::string text;
    bool space_before{false};
};

struct Piece {
    ContentKind kind;
    std::vector<Word> words;
    std::size_t keep{0};
};

std::vector<Word> split_words(std::string_view text, TokenStrategy strategy) {
    std::vector<Word> out;
    if (strategy == TokenStrategy::Lexical) {
        for (auto& t : lex_java(text, LexMode::Permissive)) {
            if (t.kind == TokenKind::EndOfFile) break;
            out.push_back({std::move(t.text), t.space_before});
        }
        return out;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = text.find_first_not_of(" \t\r\n\f", i);
        if (start == std::string_view::npos) break;
        std::size_t end = text.find_first_of(" \t\r\n\f", start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back({std::string(text.substr(start, end - start)), true});
        i = end;
    }
    return out;
}

bool includes(ContextLevel level, ContextLevel at_least) {
    return static_cast<int>(level) >= static_cast<int>(at_least);
}

// Layout order: [open] fm ctors... methods... fields... [close]
std::vector<Piece> build_pieces(const MappedPair& pair, ContextLevel level, TokenStrategy strategy) {
    const auto& cls = pair.focal_class;
    const auto& fm = pair.focal_method;
    std::vector<Piece> pieces;
    const bool wrap = includes(level, ContextLevel::FM_FC);
    if (wrap) pieces.push_back({ContentKind::ClassName, split_words(cls.name + " {", strategy)});
    pieces.push_back({ContentKind::FocalMethod, split_words(normalize_code(fm.body_text), strategy)});

    if (includes(level, ContextLevel::FM_FC_C)) {
        for (const auto& m : cls.methods) {
            if (m.is_constructor) pieces.push_back({ContentKind::ConstructorSignatures, split_words(m.header + ";", strategy)});
        }
    }
    if (includes(level, ContextLevel::FM_FC_C_M)) {
        bool skipped_focal = false;
        for (const auto& m : cls.methods) {
            if (m.is_constructor) continue;
            if (!skipped_focal && m.name == fm.name && m.header == fm.header) {
                skipped_focal = true;
                continue;
            }
            if (!cls.member_is_public(m.modifiers)) continue;
            pieces.push_back({ContentKind::PublicMethodSignatures, split_words(m.header + ";", strategy)});
        }
    }
    if (includes(level, ContextLevel::FM_FC_C_M_F)) {
        for (const auto& f : cls.fields) {
            if (!cls.member_is_public(f.modifiers)) continue;
            pieces.push_back({ContentKind::PublicFieldDeclarations, split_words(f.declaration(), strategy)});
        }
    }
    if (wrap) pieces.push_back({ContentKind::ClassName, split_words("}", strategy)});
    return pieces;
}

std::string render_pieces(const std::vector<Piece>& pieces) {
    std::string out;
    for (const auto& p : pieces) {
        for (std::size_t i = 0; i < p.keep; ++i) {
            const bool first_of_piece = i == 0;
            if (!out.empty() && (first_of_piece || p.words[i].space_before)) out += ' ';
            out += p.words[i].text;
        }
    }
    return out;
}

}  // namespace

std::string_view level_id(ContextLevel level) {
    switch (level) {
        case ContextLevel::FM: return "fm";
        case ContextLevel::FM_FC: return "fm+fc";
        case ContextLevel::FM_FC_C: return "fm+fc+c";
        case ContextLevel::FM_FC_C_M: return "fm+fc+c+m";
        case ContextLevel::FM_FC_C_M_F: return "fm+fc+c+m+f";
    }
    return "fm";
}

std::optional<ContextLevel> parse_level(std::string_view id) {
    for (auto level : kAllLevels) {
        if (level_id(level) == id) return level;
    }
    return std::nullopt;
}

std::vector<ContextLevel> parse_level_list(std::string_view spec) {
    if (spec == "all") return {std::begin(kAllLevels), std::end(kAllLevels)};
    std::vector<ContextLevel> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) comma = spec.size();
        auto item = spec.substr(pos, comma - pos);
        auto level = parse_level(item);
        if (!level) throw std::invalid_argument("unknown context level '" + std::string(item) + "'");
        if (std::find(out.begin(), out.end(), *level) == out.end()) out.push_back(*level);
        pos = comma + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(ContentKind kind) {
    switch (kind) {
        case ContentKind::FocalMethod: return "focal_method";
        case ContentKind::ClassName: return "class_name";
        case ContentKind::ConstructorSignatures: return "constructor_signatures";
        case ContentKind::PublicMethodSignatures: return "public_method_signatures";
        case ContentKind::PublicFieldDeclarations: return "public_field_declarations";
    }
    return "focal_method";
}

std::vector<ContentKind> level_contents(ContextLevel level) {
    static constexpr ContentKind order[] = {ContentKind::FocalMethod, ContentKind::ClassName,
                                            ContentKind::ConstructorSignatures, ContentKind::PublicMethodSignatures,
                                            ContentKind::PublicFieldDeclarations};
    return {std::begin(order), std::begin(order) + static_cast<int>(level) + 1};
}

std::optional<TokenStrategy> parse_token_strategy(std::string_view s) {
    if (s == "lexical") return TokenStrategy::Lexical;
    if (s == "whitespace") return TokenStrategy::Whitespace;
    return std::nullopt;
}

std::size_t count_tokens(std::string_view text, TokenStrategy strategy) {
    return split_words(text, strategy).size();
}

ContextRendering render_context(const MappedPair& pair, ContextLevel level, std::size_t budget,
                                TokenStrategy strategy) {
    if (budget < 1) throw std::invalid_argument("token budget must be at least 1");
    auto pieces = build_pieces(pair, level, strategy);

    ContextRendering r;
    r.level = level;
    for (const auto& p : pieces) r.full_token_count += p.words.size();
    r.truncated = r.full_token_count > budget;

    // Fill in priority order: focal method, wrapper (all or nothing), then members in layout order.
    std::size_t left = budget;
    auto fm = std::find_if(pieces.begin(), pieces.end(), [](const Piece& p) { return p.kind == ContentKind::FocalMethod; });
    fm->keep = std::min(left, fm->words.size());
    left -= fm->keep;
    r.focal_tokens = fm->keep;
    bool stop = fm->keep < fm->words.size();

    if (!stop && pieces.front().kind == ContentKind::ClassName) {
        auto& open = pieces.front();
        auto& close = pieces.back();
        const std::size_t wrapper = open.words.size() + close.words.size();
        if (wrapper <= left) {
            open.keep = open.words.size();
            close.keep = close.words.size();
            left -= wrapper;
        } else {
            stop = true;
        }
    }
    for (auto& p : pieces) {
        if (stop) break;
        if (p.kind == ContentKind::FocalMethod || p.kind == ContentKind::ClassName) continue;
        p.keep = std::min(left, p.words.size());
        left -= p.keep;
        if (p.keep < p.words.size()) stop = true;
    }

    r.text = render_pieces(pieces);
    for (const auto& p : pieces) r.token_count += p.keep;
    return r;
}

std::string full_context_text(const MappedPair& pair, ContextLevel level) {
    auto pieces = build_pieces(pair, level, TokenStrategy::Lexical);
    for (auto& p : pieces) p.keep = p.words.size();
    return render_pieces(pieces);
}

}  // namespace focalforge
