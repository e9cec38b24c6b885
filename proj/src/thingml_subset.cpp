// Recursive-descent recognizer for the ThingML output subset
// (docs/thingml-subset.ebnf). Keeps the generator honest: every emitted
// unit must pass.
#include "iotforge/thingml_subset.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace iotforge {

namespace {

enum class Tok {
    Id,
    Int,
    Float,
    Str,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Less,
    Greater,
    LessEq,
    GreaterEq,
    EqEq,
    NotEq,
    Assign,
    Colon,
    Comma,
    Dot,
    Bang,
    Question,
    FatArrow,
    Minus,
    Arrow,
    End,
    Bad,
};

struct Token {
    Tok type = Tok::Bad;
    std::string text;
    SourceLoc loc;
};

const std::set<std::string> kKeywords = {
    "datatype", "thing",   "fragment",  "includes",   "message",  "property",
    "function", "do",      "end",       "provided",   "required", "port",
    "sends",    "receives", "statechart", "init",     "state",    "on",
    "entry",    "exit",    "internal",  "event",      "action",   "guard",
    "transition", "return", "configuration", "instance", "connector",
    "true",     "false",   "and",       "or",         "not",
};

std::vector<Token> lex(const std::string& text, std::vector<Diagnostic>& diags) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto loc = [&]() { return SourceLoc{line, col}; };
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        char c = text[i];
        SourceLoc here = loc();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            bump(c);
            continue;
        }
        if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') bump(text[i]);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_')) {
                word.push_back(text[i]);
                bump(text[i]);
            }
            out.push_back({Tok::Id, std::move(word), here});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            bool is_float = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                num.push_back(text[i]);
                bump(text[i]);
            }
            if (i + 1 < text.size() && text[i] == '.' &&
                std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
                is_float = true;
                num.push_back(text[i]);
                bump(text[i]);
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    num.push_back(text[i]);
                    bump(text[i]);
                }
            }
            out.push_back({is_float ? Tok::Float : Tok::Int, std::move(num), here});
            continue;
        }
        if (c == '"') {
            bump(c);
            std::string value;
            bool closed = false;
            while (i < text.size()) {
                char ch = text[i];
                bump(ch);
                if (ch == '"') {
                    closed = true;
                    break;
                }
                if (ch == '\\' && i < text.size()) bump(text[i]);
                value.push_back(ch);
            }
            if (!closed)
                diags.push_back({Severity::Error, "T_SUBSET", "unterminated string", here});
            out.push_back({Tok::Str, std::move(value), here});
            continue;
        }
        auto two = [&](char a, char b) {
            return c == a && i + 1 < text.size() && text[i + 1] == b;
        };
        if (two('=', '>')) { bump(c); bump('>'); out.push_back({Tok::FatArrow, "=>", here}); continue; }
        if (two('=', '=')) { bump(c); bump('='); out.push_back({Tok::EqEq, "==", here}); continue; }
        if (two('!', '=')) { bump(c); bump('='); out.push_back({Tok::NotEq, "!=", here}); continue; }
        if (two('<', '=')) { bump(c); bump('='); out.push_back({Tok::LessEq, "<=", here}); continue; }
        if (two('>', '=')) { bump(c); bump('='); out.push_back({Tok::GreaterEq, ">=", here}); continue; }
        if (two('-', '>')) { bump(c); bump('>'); out.push_back({Tok::Arrow, "->", here}); continue; }
        bump(c);
        switch (c) {
            case '{': out.push_back({Tok::LBrace, "{", here}); break;
            case '}': out.push_back({Tok::RBrace, "}", here}); break;
            case '(': out.push_back({Tok::LParen, "(", here}); break;
            case ')': out.push_back({Tok::RParen, ")", here}); break;
            case '<': out.push_back({Tok::Less, "<", here}); break;
            case '>': out.push_back({Tok::Greater, ">", here}); break;
            case '=': out.push_back({Tok::Assign, "=", here}); break;
            case ':': out.push_back({Tok::Colon, ":", here}); break;
            case ',': out.push_back({Tok::Comma, ",", here}); break;
            case '.': out.push_back({Tok::Dot, ".", here}); break;
            case '!': out.push_back({Tok::Bang, "!", here}); break;
            case '?': out.push_back({Tok::Question, "?", here}); break;
            case '-': out.push_back({Tok::Minus, "-", here}); break;
            default:
                diags.push_back({Severity::Error, "T_SUBSET",
                                 std::string("unexpected character '") + c + "'", here});
                out.push_back({Tok::Bad, std::string(1, c), here});
                break;
        }
    }
    out.push_back({Tok::End, "", loc()});
    return out;
}

struct Fail {};

class Checker {
  public:
    Checker(std::vector<Token> tokens, std::vector<Diagnostic>& diags)
        : toks_(std::move(tokens)), diags_(diags) {}

    void check_unit() {
        if (at_kw("datatype")) {
            while (at_kw("datatype")) parse_datatype();
        } else if (at_kw("thing")) {
            advance();
            if (at_kw("fragment")) {
                advance();
                parse_fragment_body();
            } else {
                parse_thing_body();
            }
        } else if (at_kw("configuration")) {
            advance();
            parse_configuration();
        } else {
            fail("expected 'datatype', 'thing' or 'configuration'");
        }
        if (!at(Tok::End)) fail("trailing content after unit");
    }

  private:
    std::vector<Token> toks_;
    std::vector<Diagnostic>& diags_;
    std::size_t idx_ = 0;

    const Token& peek() const { return toks_[idx_]; }
    const Token& advance() {
        const Token& t = toks_[idx_];
        if (idx_ + 1 < toks_.size()) ++idx_;
        return t;
    }
    bool at(Tok type) const { return peek().type == type; }
    bool at_kw(std::string_view kw) const {
        return peek().type == Tok::Id && peek().text == kw;
    }
    bool accept(Tok type) {
        if (!at(type)) return false;
        advance();
        return true;
    }
    bool accept_kw(std::string_view kw) {
        if (!at_kw(kw)) return false;
        advance();
        return true;
    }
    [[noreturn]] void fail(const std::string& message) {
        diags_.push_back({Severity::Error, "T_SUBSET", message, peek().loc});
        throw Fail{};
    }
    void expect(Tok type, const std::string& what) {
        if (!accept(type)) fail("expected " + what);
    }
    void expect_kw(std::string_view kw) {
        if (!accept_kw(kw)) fail("expected '" + std::string(kw) + "'");
    }
    std::string expect_id(const std::string& what) {
        if (peek().type != Tok::Id) fail("expected " + what);
        if (kKeywords.count(peek().text)) fail("keyword used as " + what);
        return advance().text;
    }
    std::string expect_type() {
        std::string name = expect_id("type name");
        if (name != "Integer" && name != "Double" && name != "Boolean" && name != "String")
            fail("unknown type '" + name + "'");
        return name;
    }

    void parse_datatype() {
        expect_kw("datatype");
        expect_id("datatype name");
        expect(Tok::Less, "'<'");
        expect(Tok::Int, "size");
        expect(Tok::Greater, "'>'");
    }

    void parse_fragment_body() {
        expect_id("fragment name");
        expect(Tok::LBrace, "'{'");
        while (accept_kw("message")) {
            expect_id("message name");
            expect(Tok::LParen, "'('");
            if (!at(Tok::RParen)) {
                do {
                    expect_id("parameter name");
                    expect(Tok::Colon, "':'");
                    expect_type();
                } while (accept(Tok::Comma));
            }
            expect(Tok::RParen, "')'");
        }
        expect(Tok::RBrace, "'}'");
    }

    void parse_thing_body() {
        expect_id("thing name");
        if (accept_kw("includes")) expect_id("included fragment name");
        expect(Tok::LBrace, "'{'");
        while (!at(Tok::RBrace)) {
            if (at_kw("property")) {
                parse_property();
            } else if (at_kw("function")) {
                parse_function();
            } else if (at_kw("provided") || at_kw("required")) {
                parse_port();
            } else if (at_kw("statechart")) {
                parse_statechart();
            } else {
                fail("expected a thing member");
            }
        }
        expect(Tok::RBrace, "'}'");
    }

    void parse_property() {
        expect_kw("property");
        expect_id("property name");
        expect(Tok::Colon, "':'");
        expect_type();
        if (accept(Tok::Assign)) parse_literal();
    }

    void parse_literal() {
        if (accept(Tok::Minus)) {
            if (!accept(Tok::Int) && !accept(Tok::Float)) fail("expected a number after '-'");
            return;
        }
        if (accept(Tok::Int) || accept(Tok::Float) || accept(Tok::Str) ||
            accept_kw("true") || accept_kw("false"))
            return;
        fail("expected a literal");
    }

    void parse_function() {
        expect_kw("function");
        expect_id("function name");
        expect(Tok::LParen, "'('");
        if (!at(Tok::RParen)) {
            do {
                expect_id("parameter name");
                expect(Tok::Colon, "':'");
                expect_type();
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen, "')'");
        if (accept(Tok::Colon)) expect_type();
        expect_kw("do");
        parse_statements();
        expect_kw("end");
    }

    void parse_port() {
        advance();  // provided | required
        expect_kw("port");
        expect_id("port name");
        expect(Tok::LBrace, "'{'");
        if (accept_kw("sends")) {
            expect_id("message name");
            while (accept(Tok::Comma)) expect_id("message name");
        }
        if (accept_kw("receives")) {
            expect_id("message name");
            while (accept(Tok::Comma)) expect_id("message name");
        }
        expect(Tok::RBrace, "'}'");
    }

    void parse_statechart() {
        expect_kw("statechart");
        expect_id("statechart name");
        expect_kw("init");
        expect_id("initial state name");
        expect(Tok::LBrace, "'{'");
        while (at_kw("state")) parse_state();
        expect(Tok::RBrace, "'}'");
    }

    void parse_configuration() {
        expect_id("configuration name");
        expect(Tok::LBrace, "'{'");
        while (accept_kw("instance")) {
            expect_id("instance name");
            expect(Tok::Colon, "':'");
            expect_id("thing name");
        }
        while (accept_kw("connector")) {
            expect_id("instance name");
            expect(Tok::Dot, "'.'");
            expect_id("port name");
            expect(Tok::FatArrow, "'=>'");
            expect_id("instance name");
            expect(Tok::Dot, "'.'");
            expect_id("port name");
        }
        expect(Tok::RBrace, "'}'");
    }

    void parse_state() {
        expect_kw("state");
        expect_id("state name");
        expect(Tok::LBrace, "'{'");
        if (at_kw("on")) parse_handler("entry");
        if (at_kw("on")) parse_handler("exit");
        while (at_kw("internal")) parse_internal();
        while (at_kw("transition")) parse_transition();
        expect(Tok::RBrace, "'}'");
    }

    void parse_handler(const char* expected_kind) {
        expect_kw("on");
        if (!accept_kw(expected_kind))
            fail(std::string("expected '") + expected_kind + "' handler");
        expect_kw("do");
        parse_statements();
        expect_kw("end");
    }

    void parse_internal() {
        expect_kw("internal");
        if (accept_kw("event")) parse_event_ref();
        expect_kw("action");
        expect_kw("do");
        parse_statements();
        expect_kw("end");
    }

    void parse_event_ref() {
        expect_id("port name");
        expect(Tok::Question, "'?'");
        expect_id("message name");
    }

    void parse_transition() {
        expect_kw("transition");
        expect(Tok::Arrow, "'->'");
        expect_id("target state");
        if (accept_kw("event")) parse_event_ref();
        if (accept_kw("guard")) {
            expect(Tok::LParen, "'('");
            parse_expr();
            expect(Tok::RParen, "')'");
        }
    }

    void parse_statements() {
        while (!at_kw("end") && !at(Tok::End)) {
            if (accept_kw("return")) {
                parse_expr();
                continue;
            }
            std::string id = expect_id("statement");
            if (accept(Tok::Bang)) {
                expect_id("message name");
                expect(Tok::LParen, "'('");
                if (!at(Tok::RParen)) {
                    do {
                        parse_expr();
                    } while (accept(Tok::Comma));
                }
                expect(Tok::RParen, "')'");
            } else if (accept(Tok::Assign)) {
                parse_expr();
            } else {
                fail("expected '!' send or '=' assignment after '" + id + "'");
            }
        }
    }

    // or < and < not < comparison < primary
    void parse_expr() { parse_or(); }
    void parse_or() {
        parse_and();
        while (accept_kw("or")) parse_and();
    }
    void parse_and() {
        parse_unary();
        while (accept_kw("and")) parse_unary();
    }
    void parse_unary() {
        if (accept_kw("not")) {
            parse_unary();
            return;
        }
        parse_comparison();
    }
    void parse_comparison() {
        parse_primary();
        if (accept(Tok::EqEq) || accept(Tok::NotEq) || accept(Tok::Less) ||
            accept(Tok::LessEq) || accept(Tok::Greater) || accept(Tok::GreaterEq))
            parse_primary();
    }
    void parse_primary() {
        if (accept(Tok::LParen)) {
            parse_expr();
            expect(Tok::RParen, "')'");
            return;
        }
        if (peek().type == Tok::Id && !kKeywords.count(peek().text)) {
            advance();
            return;
        }
        parse_literal();
    }
};

}  // namespace

std::vector<Diagnostic> check_thingml_unit(const std::string& text) {
    std::vector<Diagnostic> diags;
    std::vector<Token> tokens = lex(text, diags);
    if (!diags.empty()) return diags;
    Checker checker(std::move(tokens), diags);
    try {
        checker.check_unit();
    } catch (const Fail&) {
    }
    return diags;
}

}  // namespace iotforge
