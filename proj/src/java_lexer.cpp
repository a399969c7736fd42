#include "focalforge/java_lexer.hpp"

#include <algorithm>
#include <array>

namespace focalforge {

namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract",  "assert",     "boolean",   "break",     "byte",         "case",
    "catch",     "char",       "class",     "const",     "continue",     "default",
    "do",        "double",     "else",      "enum",      "extends",      "final",
    "finally",   "float",      "for",       "goto",      "if",           "implements",
    "import",    "instanceof", "int",       "interface", "long",         "native",
    "new",       "package",    "private",   "protected", "public",       "return",
    "short",     "static",     "strictfp",  "super",     "switch",       "synchronized",
    "this",      "throw",      "throws",    "transient", "try",          "void",
    "volatile",  "while",
};

// Longest first so that maximal munch works with a linear scan.
constexpr std::array<std::string_view, 37> kOperators = {
    "<<=", "...", "->", "::", "==", "<=", ">=", "!=", "&&", "||", "++", "--", "+=",
    "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "<<", "(",  ")",  "{",  "}",  "[",
    "]",   ";",   ",",  ".",  "@",  "=",  "<",  "!",  "~",  "?",  ":",
};

constexpr std::string_view kSingleOperators = "+-*/&|^%>";

bool is_ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_separator(std::string_view t) {
    return t == "(" || t == ")" || t == "{" || t == "}" || t == "[" || t == "]" || t == ";" ||
           t == "," || t == "." || t == "..." || t == "@" || t == "::";
}

class Lexer {
public:
    Lexer(std::string_view src, LexMode mode) : src_(src), mode_(mode) {
        if (src_.size() >= 3 && static_cast<unsigned char>(src_[0]) == 0xEF &&
            static_cast<unsigned char>(src_[1]) == 0xBB && static_cast<unsigned char>(src_[2]) == 0xBF) {
            pos_ = 3;
        }
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        bool space = false;
        while (true) {
            space = skip_trivia() || space;
            if (pos_ >= src_.size()) break;
            Token tok;
            tok.offset = pos_;
            tok.line = line_;
            tok.column = column();
            tok.space_before = space;
            space = false;
            if (!lex_one(tok)) {
                space = true;
                continue;
            }
            tok.text.assign(src_.substr(tok.offset, pos_ - tok.offset));
            out.push_back(std::move(tok));
        }
        Token eof;
        eof.kind = TokenKind::EndOfFile;
        eof.offset = src_.size();
        eof.line = line_;
        eof.column = column();
        eof.space_before = space;
        out.push_back(std::move(eof));
        return out;
    }

private:
    std::uint32_t column() const { return static_cast<std::uint32_t>(pos_ - line_start_ + 1); }

    char cur(std::size_t k = 0) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            line_start_ = pos_ + 1;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw LexError(line_, column(), what); }

    // Returns true when anything was skipped.
    bool skip_trivia() {
        bool skipped = false;
        while (pos_ < src_.size()) {
            char c = cur();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
                advance();
                skipped = true;
            } else if (c == '/' && cur(1) == '/') {
                while (pos_ < src_.size() && cur() != '\n') advance();
                skipped = true;
            } else if (c == '/' && cur(1) == '*') {
                advance();
                advance();
                while (pos_ < src_.size() && !(cur() == '*' && cur(1) == '/')) advance();
                if (pos_ >= src_.size()) {
                    if (mode_ == LexMode::Strict) fail("unterminated comment");
                } else {
                    advance();
                    advance();
                }
                skipped = true;
            } else {
                break;
            }
        }
        return skipped;
    }

    // Returns false when the character was skipped (permissive mode only).
    bool lex_one(Token& tok) {
        const char c = cur();
        if (is_ident_start(static_cast<unsigned char>(c))) {
            while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(cur()))) advance();
            std::string_view word = src_.substr(tok.offset, pos_ - tok.offset);
            if (word == "true" || word == "false") {
                tok.kind = TokenKind::BooleanLiteral;
            } else if (word == "null") {
                tok.kind = TokenKind::NullLiteral;
            } else if (is_java_keyword(word)) {
                tok.kind = TokenKind::Keyword;
            } else {
                tok.kind = TokenKind::Identifier;
            }
            return true;
        }
        if (is_digit(c) || (c == '.' && is_digit(cur(1)))) {
            lex_number(tok);
            return true;
        }
        if (c == '"') {
            if (cur(1) == '"' && cur(2) == '"') {
                lex_text_block(tok);
            } else {
                lex_quoted(tok, '"', TokenKind::StringLiteral);
            }
            return true;
        }
        if (c == '\'') {
            lex_quoted(tok, '\'', TokenKind::CharLiteral);
            return true;
        }
        if (c == '>') {
            advance();
            if (cur() == '=') advance();
            tok.kind = TokenKind::Operator;
            return true;
        }
        std::string_view rest = src_.substr(pos_);
        for (std::string_view op : kOperators) {
            if (rest.substr(0, op.size()) == op) {
                for (std::size_t i = 0; i < op.size(); ++i) advance();
                tok.kind = is_separator(op) ? TokenKind::Separator : TokenKind::Operator;
                return true;
            }
        }
        if (kSingleOperators.find(c) != std::string_view::npos) {
            advance();
            tok.kind = TokenKind::Operator;
            return true;
        }
        if (mode_ == LexMode::Strict) fail(std::string("unexpected character '") + c + "'");
        advance();
        return false;
    }

    void lex_number(Token& tok) {
        bool hex = cur() == '0' && (cur(1) == 'x' || cur(1) == 'X');
        bool binary = cur() == '0' && (cur(1) == 'b' || cur(1) == 'B');
        bool floating = false;
        if (hex || binary) {
            advance();
            advance();
        }
        while (pos_ < src_.size()) {
            char ch = cur();
            bool exponent = hex ? (ch == 'p' || ch == 'P') : (!binary && (ch == 'e' || ch == 'E'));
            if (exponent) {
                floating = true;
                advance();
                if (cur() == '+' || cur() == '-') advance();
                continue;
            }
            if (ch == '.') {
                // `1..` never occurs in Java; a dot followed by an identifier start is member access.
                if (floating || (is_ident_start(static_cast<unsigned char>(cur(1))) && !is_suffix(cur(1), hex)))
                    break;
                floating = true;
                advance();
                continue;
            }
            if (is_ident_part(static_cast<unsigned char>(ch))) {
                if (!hex && (ch == 'f' || ch == 'F' || ch == 'd' || ch == 'D')) floating = true;
                advance();
                continue;
            }
            break;
        }
        tok.kind = floating ? TokenKind::FloatingLiteral : TokenKind::IntegerLiteral;
    }

    static bool is_suffix(char ch, bool hex) {
        if (hex) return ch == 'p' || ch == 'P';
        return ch == 'e' || ch == 'E' || ch == 'f' || ch == 'F' || ch == 'd' || ch == 'D';
    }

    void lex_quoted(Token& tok, char quote, TokenKind kind) {
        advance();
        while (true) {
            if (pos_ >= src_.size() || cur() == '\n') {
                if (mode_ == LexMode::Strict) fail(kind == TokenKind::StringLiteral ? "unterminated string literal"
                                                                                   : "unterminated character literal");
                break;
            }
            char ch = cur();
            if (ch == '\\') {
                advance();
                if (pos_ < src_.size() && cur() != '\n') advance();
                continue;
            }
            advance();
            if (ch == quote) break;
        }
        tok.kind = kind;
    }

    void lex_text_block(Token& tok) {
        advance();
        advance();
        advance();
        while (true) {
            if (pos_ >= src_.size()) {
                if (mode_ == LexMode::Strict) fail("unterminated text block");
                break;
            }
            if (cur() == '\\') {
                advance();
                if (pos_ < src_.size()) advance();
                continue;
            }
            if (cur() == '"' && cur(1) == '"' && cur(2) == '"') {
                advance();
                advance();
                advance();
                break;
            }
            advance();
        }
        tok.kind = TokenKind::TextBlock;
    }

    std::string_view src_;
    LexMode mode_;
    std::size_t pos_{0};
    std::uint32_t line_{1};
    std::size_t line_start_{0};
};

}  // namespace

std::vector<Token> lex_java(std::string_view source, LexMode mode) { return Lexer(source, mode).run(); }

bool is_java_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string join_tokens(const std::vector<Token>& tokens, std::size_t begin, std::size_t end) {
    std::string out;
    end = std::min(end, tokens.size());
    for (std::size_t i = begin; i < end; ++i) {
        if (tokens[i].kind == TokenKind::EndOfFile) break;
        if (i > begin && tokens[i].space_before) out.push_back(' ');
        out += tokens[i].text;
    }
    return out;
}

std::string normalize_code(std::string_view code) {
    auto tokens = lex_java(code, LexMode::Permissive);
    return join_tokens(tokens, 0, tokens.size());
}

}  // namespace focalforge
