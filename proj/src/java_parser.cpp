// Recursive-descent recognizer for Java (through the Java 17 language level)
// that builds the class/method/field model used by the miner. Expressions are
// parsed for validity and to collect call sites; no AST is retained.

#include "focalforge/code_model.hpp"
#include "focalforge/java_lexer.hpp"

#include <algorithm>
#include <array>

namespace focalforge {

namespace {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::uint32_t line, std::uint32_t column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what) {}
};

enum class ExprKind { Other, Name, Literal, Assignment, IncDec, Invocation, Creation, Lambda, MethodRef, Parenthesized };

struct Invocation {
    std::string name;
    int arity;
    std::size_t token;  // index of the callee name, for source ordering
};

struct Modifiers {
    std::vector<std::string> keywords;
    std::vector<std::string> annotations;
};

constexpr std::array<std::string_view, 8> kPrimitiveTypes = {"boolean", "byte", "char", "short",
                                                             "int",     "long", "float", "double"};

constexpr std::array<std::string_view, 12> kModifierKeywords = {
    "public", "protected", "private",   "static",   "abstract", "final",
    "native", "synchronized", "transient", "volatile", "strictfp", "default"};

constexpr std::array<std::string_view, 11> kAssignOps = {"=",  "+=", "-=", "*=",  "/=",  "%=",
                                                         "&=", "|=", "^=", "<<=", ">>="};

constexpr int kMaxDepth = 1500;

// Sets a variable for the lifetime of a scope, restoring it on exit (including unwinding).
template <class T>
class ScopedSet {
public:
    ScopedSet(T& ref, T value) : ref_(ref), saved_(ref) { ref_ = value; }
    ~ScopedSet() { ref_ = saved_; }
    ScopedSet(const ScopedSet&) = delete;
    ScopedSet& operator=(const ScopedSet&) = delete;

private:
    T& ref_;
    T saved_;
};

using SinkPtr = std::vector<Invocation>*;

class JavaParser {
public:
    JavaParser(std::string_view src, std::vector<Token> tokens, std::string rel_path)
        : src_(src), toks_(std::move(tokens)), rel_path_(std::move(rel_path)) {}

    std::vector<ClassModel> compilation_unit() {
        if (is_module_declaration()) {
            skip_module_declaration();
        } else {
            Modifiers leading = parse_modifiers();
            if (at("package")) {
                if (!leading.keywords.empty()) error("unexpected modifier before package");
                ++pos_;
                package_ = qualified_name();
                expect(";");
                leading = Modifiers{};
            }
            bool have_leading = !leading.keywords.empty() || !leading.annotations.empty();
            while (!have_leading && (at("import") || at(";"))) {
                if (accept(";")) continue;
                ++pos_;
                if (at("static")) ++pos_;
                qualified_name();
                if (accept(".")) expect("*");
                expect(";");
            }
            if (have_leading) {
                if (!at_type_decl_start()) error("expected type declaration");
                type_declaration(leading, false);
            }
            while (!at_eof()) {
                if (accept(";")) continue;
                Modifiers mods = parse_modifiers();
                if (!at_type_decl_start()) error("expected class, interface, enum or record declaration");
                type_declaration(mods, false);
            }
        }
        return std::move(classes_);
    }

private:
    // ---- token helpers --------------------------------------------------------

    const Token& tok(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool at(std::string_view t, std::size_t k = 0) const { return tok(k).is(t); }
    bool at_ident(std::size_t k = 0) const { return tok(k).kind == TokenKind::Identifier; }
    bool at_ident(std::string_view name, std::size_t k) const { return at_ident(k) && tok(k).text == name; }
    bool at_eof() const { return tok().kind == TokenKind::EndOfFile; }
    bool adjacent(std::size_t k) const { return tok(k + 1).kind != TokenKind::EndOfFile && !tok(k + 1).space_before; }

    bool accept(std::string_view t) {
        if (!at(t)) return false;
        ++pos_;
        return true;
    }

    void expect(std::string_view t) {
        if (!accept(t)) error("expected '" + std::string(t) + "'");
    }

    std::string expect_ident() {
        if (!at_ident()) error("expected identifier");
        return toks_[pos_++].text;
    }

    [[noreturn]] void error(const std::string& what) const {
        const Token& t = tok();
        std::string found = t.kind == TokenKind::EndOfFile ? "end of input" : "'" + t.text + "'";
        throw SyntaxError(t.line, t.column, what + ", found " + found);
    }

    bool at_primitive(std::size_t k = 0) const {
        return tok(k).kind == TokenKind::Keyword &&
               std::find(kPrimitiveTypes.begin(), kPrimitiveTypes.end(), tok(k).text) != kPrimitiveTypes.end();
    }

    struct Mark {
        std::size_t pos;
        std::size_t sink_size;
        std::size_t classes_size;
    };

    Mark mark() const { return {pos_, sink_ ? sink_->size() : 0, classes_.size()}; }

    void reset(const Mark& m) {
        pos_ = m.pos;
        if (sink_) sink_->resize(m.sink_size);
        classes_.resize(m.classes_size);
    }

    // Runs `f`; on a syntax error rewinds and returns false.
    template <class F>
    bool speculate(F&& f) {
        Mark m = mark();
        try {
            f();
            return true;
        } catch (const SyntaxError&) {
            reset(m);
            return false;
        }
    }

    // Runs `f` and always rewinds.
    template <class F>
    bool probe(F&& f) {
        Mark m = mark();
        bool ok = true;
        try {
            f();
        } catch (const SyntaxError&) {
            ok = false;
        }
        reset(m);
        return ok;
    }

    struct DepthGuard {
        explicit DepthGuard(JavaParser& p) : p(p) {
            if (++p.depth_ > kMaxDepth) p.error("nesting too deep");
        }
        ~DepthGuard() { --p.depth_; }
        JavaParser& p;
    };

    std::string text(std::size_t begin, std::size_t end) const { return join_tokens(toks_, begin, end); }

    void record_call(std::string name, int arity, std::size_t token) {
        if (sink_) sink_->push_back({std::move(name), arity, token});
    }

    std::string qualified_name() {
        std::string name = expect_ident();
        while (at(".") && at_ident(1)) {
            pos_ += 1;
            name += "." + expect_ident();
        }
        return name;
    }

    // ---- modules --------------------------------------------------------------

    bool is_module_declaration() const {
        std::size_t k = 0;
        if (at("@", k)) return false;
        if (at_ident("open", k)) ++k;
        return at_ident("module", k) && at_ident(k + 1);
    }

    void skip_module_declaration() {
        while (!at("{")) {
            if (at_eof()) error("expected '{'");
            ++pos_;
        }
        int depth = 0;
        do {
            if (at_eof()) error("unbalanced braces in module declaration");
            if (at("{")) ++depth;
            if (at("}")) --depth;
            ++pos_;
        } while (depth > 0);
        if (!at_eof()) error("expected end of input");
    }

    // ---- declarations ---------------------------------------------------------

    Modifiers parse_modifiers() {
        Modifiers mods;
        while (true) {
            if (at("@") && !at("interface", 1)) {
                mods.annotations.push_back(annotation());
            } else if (tok().kind == TokenKind::Keyword &&
                       std::find(kModifierKeywords.begin(), kModifierKeywords.end(), tok().text) !=
                           kModifierKeywords.end()) {
                if (at("default") && (at(":", 1) || at("->", 1))) break;
                mods.keywords.push_back(toks_[pos_++].text);
            } else if (at_ident("sealed", 0) && (tok(1).kind == TokenKind::Keyword || at("@", 1))) {
                mods.keywords.push_back(toks_[pos_++].text);
            } else if (at_ident("non", 0) && at("-", 1) && at_ident("sealed", 2) && adjacent(0) && adjacent(1)) {
                pos_ += 3;
                mods.keywords.emplace_back("non-sealed");
            } else {
                break;
            }
        }
        return mods;
    }

    std::string annotation() {
        DepthGuard guard(*this);
        expect("@");
        std::string name = qualified_name();
        if (accept("(")) {
            if (!at(")")) {
                if (at_ident() && at("=", 1)) {
                    do {
                        expect_ident();
                        expect("=");
                        element_value();
                    } while (accept(","));
                } else {
                    element_value();
                }
            }
            expect(")");
        }
        return name;
    }

    void element_value() {
        DepthGuard guard(*this);
        if (at("@")) {
            annotation();
        } else if (accept("{")) {
            while (!at("}")) {
                element_value();
                if (!accept(",")) break;
            }
            expect("}");
        } else {
            ternary();
        }
    }

    void annotations_opt() {
        while (at("@") && !at("interface", 1)) annotation();
    }

    bool is_record_start() const { return at_ident("record", 0) && at_ident(1) && (at("(", 2) || at("<", 2)); }

    bool at_type_decl_start() const {
        return at("class") || at("interface") || at("enum") || (at("@") && at("interface", 1)) || is_record_start();
    }

    void type_declaration(const Modifiers& mods, bool nested) {
        DepthGuard guard(*this);
        ClassKind kind = ClassKind::Class;
        if (accept("class")) {
            kind = ClassKind::Class;
        } else if (accept("interface")) {
            kind = ClassKind::Interface;
        } else if (accept("enum")) {
            kind = ClassKind::Enum;
        } else if (at("@")) {
            pos_ += 2;
            kind = ClassKind::Annotation;
        } else {
            ++pos_;
            kind = ClassKind::Record;
        }
        std::string name = expect_ident();

        const std::size_t idx = classes_.size();
        {
            ClassModel model;
            model.name = name;
            model.kind = kind;
            model.modifiers = mods.keywords;
            model.rel_path = rel_path_;
            model.package_name = package_;
            model.is_nested = nested;
            std::string q = package_;
            for (const auto& outer : name_stack_) q += (q.empty() ? "" : ".") + outer;
            model.qualified_name = q + (q.empty() ? "" : ".") + name;
            classes_.push_back(std::move(model));
        }
        name_stack_.push_back(name);
        struct PopName {
            std::vector<std::string>& stack;
            ~PopName() { stack.pop_back(); }
        } pop_name{name_stack_};
        ScopedSet<SinkPtr> no_sink(sink_, nullptr);
        ScopedSet<bool> lambda_ok(no_lambda_, false);

        if (at("<")) type_parameters();
        if (kind == ClassKind::Record) formal_parameters();
        if (accept("extends")) type_list();
        if (accept("implements")) type_list();
        if (at_ident("permits", 0)) {
            ++pos_;
            type_list();
        }
        if (kind == ClassKind::Enum) {
            enum_body(idx);
        } else {
            class_body(idx, kind, name);
        }
    }

    void type_list() {
        do {
            type();
        } while (accept(","));
    }

    void type_parameters() {
        expect("<");
        do {
            annotations_opt();
            expect_ident();
            if (accept("extends")) {
                do {
                    type();
                } while (accept("&"));
            }
        } while (accept(","));
        expect(">");
    }

    static constexpr std::size_t kAnonymous = static_cast<std::size_t>(-1);

    void class_body(std::size_t idx, ClassKind kind, const std::string& class_name) {
        expect("{");
        while (!at("}")) {
            if (at_eof()) error("expected '}'");
            member(idx, kind, class_name);
        }
        expect("}");
    }

    void enum_body(std::size_t idx) {
        expect("{");
        while (!at(";") && !at("}")) {
            annotations_opt();
            expect_ident();
            if (at("(")) arguments();
            if (at("{")) anonymous_body();
            if (!accept(",")) break;
        }
        if (accept(";")) {
            while (!at("}")) {
                if (at_eof()) error("expected '}'");
                member(idx, ClassKind::Enum, classes_[idx].name);
            }
        }
        expect("}");
    }

    // Members of an anonymous class body are validated but not modeled; calls
    // inside them are credited to whatever method encloses the expression.
    void anonymous_body() { class_body(kAnonymous, ClassKind::Class, ""); }

    void member(std::size_t idx, ClassKind kind, const std::string& class_name) {
        DepthGuard guard(*this);
        if (accept(";")) return;
        if (at("{")) {
            initializer_block(idx);
            return;
        }
        if (at("static") && at("{", 1)) {
            ++pos_;
            initializer_block(idx);
            return;
        }
        const std::size_t start = pos_;
        Modifiers mods = parse_modifiers();
        if (at_type_decl_start()) {
            type_declaration(mods, true);
            return;
        }
        std::string type_params;
        if (at("<")) {
            std::size_t b = pos_;
            type_parameters();
            type_params = text(b, pos_);
        }
        if (at_ident() && at("(", 1)) {
            std::string name = expect_ident();
            method_rest(idx, start, mods, type_params, "", name, true);
            return;
        }
        if (kind == ClassKind::Record && at_ident() && at("{", 1) && tok().text == class_name) {
            std::string name = expect_ident();
            method_rest(idx, start, mods, type_params, "", name, true, /*compact=*/true);
            return;
        }
        std::string return_type;
        if (accept("void")) {
            return_type = "void";
        } else {
            return_type = type();
        }
        std::string name = expect_ident();
        if (at("(")) {
            method_rest(idx, start, mods, type_params, return_type, name, false);
            return;
        }
        if (!type_params.empty()) error("expected '('");
        field_rest(idx, mods, return_type, name);
    }

    void initializer_block(std::size_t idx) {
        std::vector<Invocation> discard;
        ScopedSet<SinkPtr> scope(sink_, idx != kAnonymous ? &discard : sink_);
        block();
    }

    void method_rest(std::size_t idx, std::size_t start, const Modifiers& mods, const std::string& type_params,
                     std::string return_type, const std::string& name, bool constructor, bool compact = false) {
        std::vector<Parameter> params;
        std::string params_text = "()";
        if (!compact) {
            std::size_t b = pos_;
            params = formal_parameters();
            params_text = text(b, pos_);
        }
        std::string dims;
        while (at("[") && at("]", 1)) {
            pos_ += 2;
            dims += "[]";
        }
        return_type += dims;
        std::string throws_text;
        if (at("throws")) {
            std::size_t b = pos_;
            ++pos_;
            type_list();
            throws_text = text(b, pos_);
        }

        std::vector<Invocation> calls;
        {
            ScopedSet<SinkPtr> scope(sink_, idx != kAnonymous ? &calls : sink_);
            if (at("{")) {
                block();
            } else if (accept("default")) {
                element_value();
                expect(";");
            } else {
                expect(";");
            }
        }
        if (idx == kAnonymous) return;

        MethodModel m;
        m.name = name;
        m.is_constructor = constructor;
        m.modifiers = mods.keywords;
        m.annotations = mods.annotations;
        m.parameters = std::move(params);
        m.return_type = constructor ? "" : return_type;
        m.span_begin = toks_[start].offset;
        m.span_end = toks_[pos_ - 1].end();
        m.body_text.assign(src_.substr(m.span_begin, m.span_end - m.span_begin));

        std::string sig = constructor ? name : return_type + " " + name;
        sig += "(";
        for (std::size_t i = 0; i < m.parameters.size(); ++i) {
            if (i) sig += ", ";
            sig += m.parameters[i].type;
        }
        sig += ")";
        m.signature = std::move(sig);

        std::string header;
        auto append = [&header](const std::string& part) {
            if (part.empty()) return;
            if (!header.empty()) header.push_back(' ');
            header += part;
        };
        for (const auto& kw : mods.keywords) append(kw);
        append(type_params);
        append(m.return_type);
        append(name + params_text);
        append(throws_text);
        m.header = std::move(header);

        // Nested calls finish before their receivers; order by callee position instead.
        std::stable_sort(calls.begin(), calls.end(),
                         [](const Invocation& a, const Invocation& b) { return a.token < b.token; });
        for (auto& call : calls) {
            m.invocations.push_back(std::move(call.name));
            m.invocation_arity.push_back(call.arity);
        }
        classes_[idx].methods.push_back(std::move(m));
    }

    void field_rest(std::size_t idx, const Modifiers& mods, const std::string& type_text, std::string name) {
        std::vector<Invocation> discard;
        ScopedSet<SinkPtr> scope(sink_, idx != kAnonymous ? &discard : sink_);
        while (true) {
            std::string declared = type_text;
            while (at("[") && at("]", 1)) {
                pos_ += 2;
                declared += "[]";
            }
            if (accept("=")) variable_initializer();
            if (idx != kAnonymous) {
                FieldModel f;
                f.name = name;
                f.declared_type = declared;
                f.modifiers = mods.keywords;
                f.annotations = mods.annotations;
                classes_[idx].fields.push_back(std::move(f));
            }
            if (!accept(",")) break;
            name = expect_ident();
        }
        expect(";");
    }

    std::vector<Parameter> formal_parameters() {
        std::vector<Parameter> params;
        expect("(");
        if (!at(")")) {
            do {
                params.push_back(formal_parameter());
            } while (accept(","));
        }
        expect(")");
        return params;
    }

    Parameter formal_parameter() {
        parse_modifiers();
        Parameter p;
        std::size_t b = pos_;
        type();
        annotations_opt();
        accept("...");
        p.type = text(b, pos_);
        if (accept("this")) {
            p.name = "this";
            return p;
        }
        p.name = expect_ident();
        if (at(".") && at("this", 1)) {
            pos_ += 2;
            p.name += ".this";
            return p;
        }
        while (at("[") && at("]", 1)) {
            pos_ += 2;
            p.type += "[]";
        }
        return p;
    }

    // ---- types ----------------------------------------------------------------

    std::string type(bool allow_diamond = false) {
        DepthGuard guard(*this);
        std::size_t b = pos_;
        annotations_opt();
        if (at_primitive()) {
            ++pos_;
        } else {
            expect_ident();
            if (at("<")) type_arguments(allow_diamond);
            while (at(".") && (at_ident(1) || at("@", 1))) {
                ++pos_;
                annotations_opt();
                expect_ident();
                if (at("<")) type_arguments(allow_diamond);
            }
        }
        dims_opt();
        return text(b, pos_);
    }

    void dims_opt() {
        while ((at("[") && at("]", 1)) || (at("@") && probe([&] {
                                               annotations_opt();
                                               expect("[");
                                               expect("]");
                                           }))) {
            annotations_opt();
            pos_ += 2;
        }
    }

    void type_arguments(bool allow_diamond) {
        expect("<");
        if (allow_diamond && accept(">")) return;
        do {
            annotations_opt();
            if (accept("?")) {
                if (accept("extends") || accept("super")) type();
            } else {
                type();
            }
        } while (accept(","));
        expect(">");
    }

    // ---- statements -----------------------------------------------------------

    void block() {
        DepthGuard guard(*this);
        expect("{");
        while (!at("}")) {
            if (at_eof()) error("expected '}'");
            block_statement();
        }
        expect("}");
    }

    bool at_local_var_decl() {
        return probe([&] {
            type();
            if (!at_ident()) error("expected identifier");
            if (!(at("=", 1) || at(";", 1) || at(",", 1) || at("[", 1) || at(":", 1))) error("not a declaration");
        });
    }

    bool at_yield_statement() const {
        if (!at_ident("yield", 0)) return false;
        const Token& next = tok(1);
        if (next.kind == TokenKind::EndOfFile) return false;
        static constexpr std::array<std::string_view, 20> kNotYield = {
            "=", ".", "[", ";", "++", "--", "->", ":", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">", ">=", ","};
        for (auto t : kNotYield)
            if (next.is(t)) return false;
        return true;
    }

    void block_statement() {
        DepthGuard guard(*this);
        if (at_type_decl_start()) {
            type_declaration({}, true);
            return;
        }
        if (at("final") || (at("@") && !at("interface", 1)) || at("abstract") || at("static") ||
            (at_ident("sealed", 0) && tok(1).kind == TokenKind::Keyword)) {
            Modifiers mods = parse_modifiers();
            if (at_type_decl_start()) {
                type_declaration(mods, true);
                return;
            }
            local_variable_declaration();
            expect(";");
            return;
        }
        if (!at_yield_statement() && (at_ident() || at_primitive()) && at_local_var_decl()) {
            local_variable_declaration();
            expect(";");
            return;
        }
        statement();
    }

    void local_variable_declaration() {
        type();
        do {
            expect_ident();
            dims_opt();
            if (accept("=")) variable_initializer();
        } while (accept(","));
    }

    void variable_initializer() {
        if (at("{")) {
            array_initializer();
        } else {
            expression();
        }
    }

    void array_initializer() {
        DepthGuard guard(*this);
        expect("{");
        while (!at("}")) {
            variable_initializer();
            if (!accept(",")) break;
        }
        expect("}");
    }

    void statement() {
        DepthGuard guard(*this);
        if (at("{")) {
            block();
            return;
        }
        if (accept(";")) return;
        if (accept("if")) {
            par_expression();
            statement();
            if (accept("else")) statement();
            return;
        }
        if (accept("while")) {
            par_expression();
            statement();
            return;
        }
        if (accept("do")) {
            statement();
            expect("while");
            par_expression();
            expect(";");
            return;
        }
        if (at("for")) {
            for_statement();
            return;
        }
        if (at("try")) {
            try_statement();
            return;
        }
        if (at("switch")) {
            switch_block();
            return;
        }
        if (accept("return")) {
            if (!at(";")) expression();
            expect(";");
            return;
        }
        if (accept("break") || accept("continue")) {
            if (at_ident()) ++pos_;
            expect(";");
            return;
        }
        if (accept("throw")) {
            expression();
            expect(";");
            return;
        }
        if (at("synchronized")) {
            ++pos_;
            par_expression();
            block();
            return;
        }
        if (accept("assert")) {
            expression();
            if (accept(":")) expression();
            expect(";");
            return;
        }
        if (at_yield_statement()) {
            ++pos_;
            expression();
            expect(";");
            return;
        }
        if (at_ident() && at(":", 1)) {
            pos_ += 2;
            statement();
            return;
        }
        ExprKind kind = expression();
        if (kind != ExprKind::Assignment && kind != ExprKind::IncDec && kind != ExprKind::Invocation &&
            kind != ExprKind::Creation) {
            error("not a statement");
        }
        expect(";");
    }

    void par_expression() {
        expect("(");
        expression();
        expect(")");
    }

    void for_statement() {
        expect("for");
        expect("(");
        bool enhanced = probe([&] {
            parse_modifiers();
            type();
            expect_ident();
            expect(":");
        });
        if (enhanced) {
            parse_modifiers();
            type();
            expect_ident();
            expect(":");
            expression();
            expect(")");
            statement();
            return;
        }
        if (!at(";")) {
            if (at("final") || at("@")) {
                parse_modifiers();
                local_variable_declaration();
            } else if ((at_ident() || at_primitive()) && at_local_var_decl()) {
                local_variable_declaration();
            } else {
                statement_expression_list();
            }
        }
        expect(";");
        if (!at(";")) expression();
        expect(";");
        if (!at(")")) statement_expression_list();
        expect(")");
        statement();
    }

    void statement_expression_list() {
        do {
            ExprKind kind = expression();
            if (kind != ExprKind::Assignment && kind != ExprKind::IncDec && kind != ExprKind::Invocation &&
                kind != ExprKind::Creation) {
                error("not a statement");
            }
        } while (accept(","));
    }

    void try_statement() {
        expect("try");
        bool resources = false;
        if (accept("(")) {
            resources = true;
            while (!at(")")) {
                bool declared = probe([&] {
                    parse_modifiers();
                    type();
                    expect_ident();
                    expect("=");
                });
                if (declared) {
                    parse_modifiers();
                    type();
                    expect_ident();
                    expect("=");
                }
                expression();
                if (!accept(";")) break;
            }
            expect(")");
        }
        block();
        bool handlers = false;
        while (accept("catch")) {
            handlers = true;
            expect("(");
            parse_modifiers();
            type();
            while (accept("|")) type();
            expect_ident();
            expect(")");
            block();
        }
        if (accept("finally")) {
            handlers = true;
            block();
        }
        if (!handlers && !resources) error("expected 'catch' or 'finally'");
    }

    // Shared by switch statements and switch expressions.
    void switch_block() {
        DepthGuard guard(*this);
        expect("switch");
        par_expression();
        expect("{");
        while (!at("}")) {
            if (at_eof()) error("expected '}'");
            if (accept("default")) {
            } else {
                expect("case");
                case_labels();
            }
            if (accept("->")) {
                if (at("{")) {
                    block();
                } else if (at("throw")) {
                    statement();
                } else {
                    expression();
                    expect(";");
                }
                continue;
            }
            expect(":");
            while (!at("case") && !at("default") && !at("}")) {
                if (at_eof()) error("expected '}'");
                block_statement();
            }
        }
        expect("}");
    }

    void case_labels() {
        ScopedSet<bool> no_lambda(no_lambda_, true);
        do {
            if (accept("default")) continue;
            bool pattern = probe([&] {
                parse_modifiers();
                type();
                expect_ident();
                if (!(at("->") || at(":") || at(",") || at_ident("when", 0))) error("not a pattern");
            });
            if (pattern) {
                parse_modifiers();
                type();
                expect_ident();
            } else {
                ternary();
            }
        } while (accept(","));
        if (at_ident("when", 0)) {
            ++pos_;
            expression();
        }
    }

    // ---- expressions ----------------------------------------------------------

    bool at_lambda() const {
        if (no_lambda_) return false;
        if (at_ident() && at("->", 1)) return true;
        if (!at("(")) return false;
        int depth = 0;
        for (std::size_t k = 0;; ++k) {
            const Token& t = tok(k);
            if (t.kind == TokenKind::EndOfFile) return false;
            if (t.is("(")) ++depth;
            if (t.is(")") && --depth == 0) return at("->", k + 1);
        }
    }

    ExprKind lambda() {
        DepthGuard guard(*this);
        if (at_ident()) {
            ++pos_;
        } else {
            expect("(");
            if (!at(")")) {
                if (at_ident() && (at(",", 1) || at(")", 1))) {
                    do {
                        expect_ident();
                    } while (accept(","));
                } else {
                    do {
                        formal_parameter();
                    } while (accept(","));
                }
            }
            expect(")");
        }
        expect("->");
        ScopedSet<bool> lambda_ok(no_lambda_, false);
        if (at("{")) {
            block();
        } else {
            expression();
        }
        return ExprKind::Lambda;
    }

    // Returns the assignment operator at the cursor and its token count, or 0.
    std::size_t assignment_op() const {
        for (auto op : kAssignOps)
            if (at(op)) return 1;
        if (at(">") && adjacent(0)) {
            if (at(">=", 1)) return 2;
            if (at(">", 1) && adjacent(1) && at(">=", 2)) return 3;
        }
        return 0;
    }

    ExprKind expression() {
        DepthGuard guard(*this);
        if (at_lambda()) return lambda();
        ExprKind kind = ternary();
        if (std::size_t n = assignment_op()) {
            pos_ += n;
            expression();
            return ExprKind::Assignment;
        }
        return kind;
    }

    ExprKind ternary() {
        DepthGuard guard(*this);
        ExprKind kind = binary(1);
        if (accept("?")) {
            {
                ScopedSet<bool> lambda_ok(no_lambda_, false);
                if (at_lambda()) {
                    lambda();
                } else {
                    ternary();
                }
            }
            expect(":");
            if (at_lambda()) {
                lambda();
            } else {
                ternary();
            }
            return ExprKind::Other;
        }
        return kind;
    }

    // Binary operator at the cursor: precedence (0 = none) and token count.
    std::pair<int, std::size_t> binary_op() const {
        const Token& t = tok();
        if (t.kind != TokenKind::Operator && !t.is("instanceof")) return {0, 0};
        if (t.is(">")) {
            if (adjacent(0) && at(">", 1)) {
                if (adjacent(1) && at(">", 2)) return {8, 3};
                if (adjacent(1) && at(">=", 2)) return {0, 0};
                return {8, 2};
            }
            if (adjacent(0) && at(">=", 1)) return {0, 0};
            return {7, 1};
        }
        static const std::array<std::pair<std::string_view, int>, 17> kOps = {{
            {"||", 1}, {"&&", 2}, {"|", 3}, {"^", 4}, {"&", 5}, {"==", 6}, {"!=", 6}, {"<", 7}, {"<=", 7},
            {">=", 7}, {"instanceof", 7}, {"<<", 8}, {"+", 9}, {"-", 9}, {"*", 10}, {"/", 10}, {"%", 10},
        }};
        for (const auto& [op, prec] : kOps)
            if (t.is(op)) return {prec, 1};
        return {0, 0};
    }

    ExprKind binary(int min_prec) {
        DepthGuard guard(*this);
        ExprKind kind = unary();
        while (true) {
            auto [prec, ntoks] = binary_op();
            if (prec == 0 || prec < min_prec) break;
            if (at("instanceof")) {
                ++pos_;
                accept("final");
                type();
                if (at_ident() && !at_ident("when", 0)) ++pos_;
            } else {
                pos_ += ntoks;
                binary(prec + 1);
            }
            kind = ExprKind::Other;
        }
        return kind;
    }

    bool can_start_cast_operand() const {
        const Token& t = tok();
        if (t.kind == TokenKind::Identifier || t.is_literal()) return true;
        return t.is("(") || t.is("!") || t.is("~") || t.is("this") || t.is("super") || t.is("new") ||
               t.is("switch") || at_primitive();
    }

    ExprKind unary() {
        DepthGuard guard(*this);
        if (at("++") || at("--")) {
            ++pos_;
            unary();
            return ExprKind::IncDec;
        }
        if (at("+") || at("-") || at("!") || at("~")) {
            ++pos_;
            unary();
            return ExprKind::Other;
        }
        if (at("(") && at_primitive(1)) {
            bool is_cast = probe([&] {
                ++pos_;
                type();
                expect(")");
            });
            if (is_cast) {
                ++pos_;
                type();
                expect(")");
                unary();
                return ExprKind::Other;
            }
        }
        if (at("(") && (at_ident(1) || at("@", 1))) {
            Mark m = mark();
            bool cast = speculate([&] {
                ++pos_;
                type();
                while (accept("&")) type();
                expect(")");
                if (!can_start_cast_operand() && !at_lambda()) error("not a cast");
            });
            if (cast) {
                if (at_lambda()) {
                    lambda();
                    return ExprKind::Other;
                }
                if (speculate([&] { unary(); })) return ExprKind::Other;
                reset(m);
            }
        }
        return postfix();
    }

    ExprKind postfix() {
        ExprKind kind = primary();
        kind = selectors(kind);
        while (at("++") || at("--")) {
            ++pos_;
            kind = ExprKind::IncDec;
        }
        return kind;
    }

    int arguments() {
        DepthGuard guard(*this);
        expect("(");
        int n = 0;
        ScopedSet<bool> lambda_ok(no_lambda_, false);
        if (!at(")")) {
            do {
                expression();
                ++n;
            } while (accept(","));
        }
        expect(")");
        return n;
    }

    ExprKind primary() {
        DepthGuard guard(*this);
        const Token& t = tok();
        if (t.is_literal()) {
            ++pos_;
            return ExprKind::Literal;
        }
        if (accept("this")) {
            if (at("(")) {
                arguments();
                return ExprKind::Invocation;
            }
            return ExprKind::Name;
        }
        if (accept("super")) {
            if (at("(")) {
                arguments();
                return ExprKind::Invocation;
            }
            return super_suffix();
        }
        if (at("new")) return creator();
        if (at("switch")) {
            switch_block();
            return ExprKind::Other;
        }
        if (accept("(")) {
            ScopedSet<bool> lambda_ok(no_lambda_, false);
            expression();
            expect(")");
            return ExprKind::Parenthesized;
        }
        if (at_primitive() || at("void")) {
            ++pos_;
            dims_opt();
            if (accept("::")) {
                expect("new");
                return ExprKind::MethodRef;
            }
            expect(".");
            expect("class");
            return ExprKind::Other;
        }
        if (at_ident()) {
            if (at("(", 1)) {
                const std::size_t token = pos_;
                std::string name = toks_[pos_++].text;
                int arity = arguments();
                record_call(std::move(name), arity, token);
                return ExprKind::Invocation;
            }
            if (at("[", 1) && at("]", 2)) {
                type();
                if (accept("::")) {
                    expect("new");
                    return ExprKind::MethodRef;
                }
                expect(".");
                expect("class");
                return ExprKind::Other;
            }
            if (at("<", 1)) {
                bool ref = speculate([&] {
                    type();
                    expect("::");
                });
                if (ref) {
                    if (!accept("new")) expect_ident();
                    return ExprKind::MethodRef;
                }
            }
            ++pos_;
            return ExprKind::Name;
        }
        error("expected expression");
    }

    ExprKind super_suffix() {
        if (accept("::")) {
            expect_ident();
            return ExprKind::MethodRef;
        }
        expect(".");
        if (at("<")) type_arguments(false);
        std::string name = expect_ident();
        const std::size_t token = pos_ - 1;
        if (at("(")) {
            int arity = arguments();
            record_call(std::move(name), arity, token);
            return ExprKind::Invocation;
        }
        return ExprKind::Name;
    }

    ExprKind selectors(ExprKind kind) {
        while (true) {
            if (at(".")) {
                ++pos_;
                if (at("new")) {
                    kind = creator();
                    continue;
                }
                if (accept("this") || accept("class")) {
                    kind = ExprKind::Other;
                    continue;
                }
                if (accept("super")) {
                    if (at("(")) {
                        arguments();
                        kind = ExprKind::Invocation;
                    } else {
                        kind = super_suffix();
                    }
                    continue;
                }
                if (at("<")) type_arguments(false);
                std::string name = expect_ident();
                const std::size_t token = pos_ - 1;
                if (at("(")) {
                    int arity = arguments();
                    record_call(std::move(name), arity, token);
                    kind = ExprKind::Invocation;
                } else {
                    kind = ExprKind::Name;
                }
            } else if (at("[")) {
                ++pos_;
                expression();
                expect("]");
                kind = ExprKind::Name;
            } else if (accept("::")) {
                if (at("<")) type_arguments(false);
                if (!accept("new")) expect_ident();
                kind = ExprKind::MethodRef;
            } else {
                return kind;
            }
        }
    }

    ExprKind creator() {
        DepthGuard guard(*this);
        expect("new");
        if (at("<")) type_arguments(false);
        annotations_opt();
        if (at_primitive()) {
            ++pos_;
            array_creation_rest();
            return ExprKind::Other;
        }
        expect_ident();
        if (at("<")) type_arguments(true);
        while (at(".") && (at_ident(1) || at("@", 1))) {
            ++pos_;
            annotations_opt();
            expect_ident();
            if (at("<")) type_arguments(true);
        }
        if (at("[") || (at("@") && !at("interface", 1))) {
            array_creation_rest();
            return ExprKind::Other;
        }
        arguments();
        if (at("{")) anonymous_body();
        return ExprKind::Creation;
    }

    void array_creation_rest() {
        bool sized = false;
        while (true) {
            annotations_opt();
            if (!at("[")) break;
            if (at("]", 1)) {
                pos_ += 2;
                continue;
            }
            if (!sized && pos_ > 0 && toks_[pos_ - 1].is("]")) error("expected dimension expression");
            ++pos_;
            expression();
            expect("]");
            sized = true;
        }
        if (!sized) array_initializer();
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::string rel_path_;
    std::string package_;
    std::size_t pos_{0};
    int depth_{0};
    bool no_lambda_{false};
    std::vector<ClassModel> classes_;
    std::vector<std::string> name_stack_;
    std::vector<Invocation>* sink_{nullptr};
};

}  // namespace

std::vector<ClassModel> parse_file(const SourceFile& file) {
    try {
        auto tokens = lex_java(file.content, LexMode::Strict);
        JavaParser parser(file.content, std::move(tokens), file.rel_path);
        return parser.compilation_unit();
    } catch (const LexError& e) {
        throw ParseFailure(file.rel_path, e.what());
    } catch (const SyntaxError& e) {
        throw ParseFailure(file.rel_path, e.what());
    }
}

std::string syntax_diagnostic(std::string_view source) {
    try {
        auto tokens = lex_java(source, LexMode::Strict);
        JavaParser parser(source, std::move(tokens), "");
        parser.compilation_unit();
        return {};
    } catch (const LexError& e) {
        return e.what();
    } catch (const SyntaxError& e) {
        return e.what();
    }
}

}  // namespace focalforge
