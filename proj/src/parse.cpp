#include "selp/parse.hpp"

#include <cctype>

namespace selp {

namespace {

enum class Tok { Ident, Eneg, KOp, MOp, NotKw, Pipe, Implies, Comma, Dot, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceSpan span;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.span = {line_, col_, 1};
        if (pos_ >= text_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = text_[pos_];
        if (c == '|') return single(Tok::Pipe);
        if (c == ',') return single(Tok::Comma);
        if (c == '.') return single(Tok::Dot);
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                advance();
                advance();
                t.kind = Tok::Implies;
                t.span.length = 2;
                return t;
            }
            fail("expected ':-'", t.span);
        }
        if (c == '$') {
            if (text_.compare(pos_, 5, "$not$") == 0) {
                for (int i = 0; i < 5; ++i) advance();
                t.kind = Tok::Eneg;
                t.span.length = 5;
                return t;
            }
            fail("expected '$not$'", t.span);
        }
        if (c == 'K' || c == 'M') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '$') {
                advance();
                advance();
                t.kind = c == 'K' ? Tok::KOp : Tok::MOp;
                t.span.length = 2;
                return t;
            }
            fail(std::string("expected '") + c + "$'", t.span);
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                ident += text_[pos_];
                advance();
            }
            t.span.length = static_cast<int>(ident.size());
            if (ident == "not") {
                t.kind = Tok::NotKw;
            } else {
                t.kind = Tok::Ident;
                t.text = std::move(ident);
            }
            return t;
        }
        fail(std::string("unexpected character '") + c + "'", t.span);
    }

private:
    [[noreturn]] void fail(const std::string& msg, SourceSpan s) {
        throw ParseError(msg, s);
    }
    Token single(Tok kind) {
        Token t;
        t.kind = kind;
        t.span = {line_, col_, 1};
        advance();
        return t;
    }
    void advance() {
        if (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, Dialect d) : lexer_(text), dialect_(d) {
        cur_ = lexer_.next();
    }

    ElpProgram run() {
        ElpProgram p;
        while (cur_.kind != Tok::End) parse_rule(p);
        return normalize_duplicates(p);
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, cur_.span);
    }
    void bump() { cur_ = lexer_.next(); }
    bool accept(Tok k) {
        if (cur_.kind != k) return false;
        bump();
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) fail(std::string("expected ") + what);
    }

    AtomIdx parse_atom(ElpProgram& p) {
        if (cur_.kind != Tok::Ident) fail("expected atom name");
        if (cur_.text.find(kDupMarker) != std::string::npos)
            fail("atom name uses reserved marker '" + std::string(kDupMarker) + "'");
        AtomIdx a = p.atoms.add(cur_.text);
        bump();
        return a;
    }

    BodyElement parse_body_element(ElpProgram& p) {
        bool outer = accept(Tok::NotKw);
        if (dialect_ == Dialect::Not) {
            if (accept(Tok::Eneg)) {
                bool inner = accept(Tok::NotKw);
                return BodyElement::elit({parse_atom(p), inner}, outer);
            }
            if (cur_.kind == Tok::KOp || cur_.kind == Tok::MOp)
                fail("modal operators are not part of this dialect");
        } else {
            if (cur_.kind == Tok::Eneg)
                fail("'$not$' is not part of the K/M dialect");
            if (accept(Tok::KOp)) {
                // K a = not eneg a; not K a collapses to eneg a
                return BodyElement::elit({parse_atom(p), false}, !outer);
            }
            if (accept(Tok::MOp)) {
                // M a = eneg not a; not M a = not eneg not a
                return BodyElement::elit({parse_atom(p), true}, outer);
            }
        }
        if (outer && cur_.kind == Tok::NotKw)
            fail("double 'not' is not allowed on a plain literal");
        return BodyElement::literal({parse_atom(p), outer});
    }

    void parse_rule(ElpProgram& p) {
        ElpRule r;
        if (cur_.kind == Tok::Ident) {
            r.head.push_back(parse_atom(p));
            while (accept(Tok::Pipe)) r.head.push_back(parse_atom(p));
        }
        bool has_body = false;
        if (accept(Tok::Implies)) {
            has_body = true;
            if (cur_.kind != Tok::Dot) {
                r.body.push_back(parse_body_element(p));
                while (accept(Tok::Comma)) r.body.push_back(parse_body_element(p));
            } else if (!r.head.empty()) {
                fail("expected a body element"); // facts are written without ':-'
            }
        }
        if (r.head.empty() && !has_body) fail("expected a rule");
        expect(Tok::Dot, "'.'");
        p.rules.push_back(std::move(r));
    }

    Lexer lexer_;
    Dialect dialect_;
    Token cur_;
};

std::string render_element(const ElpProgram& p, const BodyElement& e, Dialect d) {
    const std::string& n = p.atoms.name(e.lit.atom);
    if (!e.epistemic) return e.lit.negated ? "not " + n : n;
    if (d == Dialect::Not) {
        std::string out = e.outer_negated ? "not $not$ " : "$not$ ";
        if (e.lit.negated) out += "not ";
        return out + n;
    }
    if (!e.lit.negated) return e.outer_negated ? "K$ " + n : "not K$ " + n;
    return e.outer_negated ? "not M$ " + n : "M$ " + n;
}

} // namespace

ElpProgram parse_easp(std::string_view text, Dialect d) {
    return Parser(text, d).run();
}

ElpProgram parse_easp_not(std::string_view text) {
    return parse_easp(text, Dialect::Not);
}

ElpProgram parse_easp_km(std::string_view text) {
    return parse_easp(text, Dialect::Km);
}

std::string render_elp(const ElpProgram& p, Dialect d) {
    std::string out;
    for (const ElpRule& r : p.rules) {
        for (size_t i = 0; i < r.head.size(); ++i) {
            if (i) out += " | ";
            out += p.atoms.name(r.head[i]);
        }
        if (!r.body.empty()) {
            if (!r.head.empty()) out += ' ';
            out += ":- ";
            for (size_t i = 0; i < r.body.size(); ++i) {
                if (i) out += ", ";
                out += render_element(p, r.body[i], d);
            }
        } else if (r.head.empty()) {
            out += ":-"; // the always-violated constraint still needs a body marker
        }
        out += ".\n";
    }
    return out;
}

} // namespace selp
