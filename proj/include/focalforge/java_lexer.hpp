#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace focalforge {

enum class TokenKind {
    Identifier,
    Keyword,
    IntegerLiteral,
    FloatingLiteral,
    CharLiteral,
    StringLiteral,
    TextBlock,
    BooleanLiteral,
    NullLiteral,
    Separator,
    Operator,
    EndOfFile,
};

struct Token {
    TokenKind kind{TokenKind::EndOfFile};
    std::string text;
    std::size_t offset{0};
    std::uint32_t line{1};
    std::uint32_t column{1};
    // Whitespace or a comment sits between this token and the previous one.
    bool space_before{false};

    std::size_t end() const { return offset + text.size(); }
    bool is(std::string_view t) const {
        return text == t && kind != TokenKind::StringLiteral && kind != TokenKind::CharLiteral &&
               kind != TokenKind::TextBlock;
    }
    bool is_literal() const {
        return kind == TokenKind::IntegerLiteral || kind == TokenKind::FloatingLiteral ||
               kind == TokenKind::CharLiteral || kind == TokenKind::StringLiteral ||
               kind == TokenKind::TextBlock || kind == TokenKind::BooleanLiteral ||
               kind == TokenKind::NullLiteral;
    }
};

class LexError : public std::runtime_error {
public:
    LexError(std::uint32_t line, std::uint32_t column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::uint32_t line() const { return line_; }
    std::uint32_t column() const { return column_; }

private:
    std::uint32_t line_;
    std::uint32_t column_;
};

enum class LexMode {
    // Unterminated literals/comments and stray characters throw LexError.
    Strict,
    // Fragments: unterminated constructs run to end of input, stray characters are skipped.
    Permissive,
};

/// Tokenizes Java source. The returned vector always ends with an EndOfFile token.
///
/// A run of `>` characters is emitted as individual `>` tokens (and `>=` stays one
/// token) so that nested generic closers need no splitting; the parser re-joins
/// adjacent `>` tokens into shift operators.
std::vector<Token> lex_java(std::string_view source, LexMode mode = LexMode::Strict);

/// True for the 50 reserved words of the Java language (not `true`/`false`/`null`).
bool is_java_keyword(std::string_view word);

/// Re-joins tokens with a single space wherever the source had whitespace or a
/// comment between them. Comments are dropped.
std::string join_tokens(const std::vector<Token>& tokens, std::size_t begin, std::size_t end);

/// Whitespace-collapsed rendering of a code fragment (permissive lexing).
std::string normalize_code(std::string_view code);

}  // namespace focalforge
