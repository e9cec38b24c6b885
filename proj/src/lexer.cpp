#include "iotforge/lexer.hpp"

#include <cctype>
#include <charconv>
#include <unordered_set>

namespace iotforge {

namespace {

const std::unordered_set<std::string_view> kReserved = {
    "system",    "payload",   "interface",    "op",        "element",
    "board",     "entity",    "powersource",  "property",  "provides",
    "requires",  "bidir",     "port",         "part",      "connect",
    "statemachine", "initial", "state",       "entry",     "exit",
    "internal",  "transition", "on",          "event",     "incoming",
    "outgoing",  "generic",   "via",          "does",      "action",
    "send",      "receive",   "set",          "processor", "core",
    "allocate",  "rt",        "periodic",     "sporadic",  "wcet",
    "deadline",  "priority",  "ms",           "int",       "float",
    "bool",      "string",    "true",         "false",     "and",
    "or",        "not",
};

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;

    bool done() const { return pos >= text.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos + ahead < text.size() ? text[pos + ahead] : '\0';
    }
    char advance() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        return c;
    }
    SourceLoc loc() const { return {line, column}; }
};

}  // namespace

bool is_reserved_word(std::string_view word) { return kReserved.count(word) > 0; }

std::vector<Token> tokenize(std::string_view text, std::vector<Diagnostic>& diagnostics) {
    std::vector<Token> tokens;
    Cursor cur{text};

    auto push = [&](TokenType type, std::string lexeme, SourceLoc loc) {
        Token t;
        t.type = type;
        t.text = std::move(lexeme);
        t.loc = loc;
        tokens.push_back(std::move(t));
    };
    auto lex_error = [&](SourceLoc loc, std::string message) {
        diagnostics.push_back({Severity::Error, "E_LEX", std::move(message), loc});
    };

    while (!cur.done()) {
        char c = cur.peek();
        SourceLoc loc = cur.loc();

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.done() && cur.peek() != '\n') cur.advance();
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (!cur.done() && (std::isalnum(static_cast<unsigned char>(cur.peek())) ||
                                   cur.peek() == '_'))
                word.push_back(cur.advance());
            push(is_reserved_word(word) ? TokenType::Keyword : TokenType::Identifier,
                 std::move(word), loc);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                digits.push_back(cur.advance());
            bool is_float = false;
            if (cur.peek() == '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
                is_float = true;
                digits.push_back(cur.advance());
                while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                    digits.push_back(cur.advance());
            }
            Token t;
            t.loc = loc;
            t.text = digits;
            if (is_float) {
                t.type = TokenType::Float;
                auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                               t.float_value);
                if (ec != std::errc{}) {
                    lex_error(loc, "malformed number '" + digits + "'");
                    t.type = TokenType::Error;
                }
            } else {
                t.type = TokenType::Integer;
                auto [p, ec] =
                    std::from_chars(digits.data(), digits.data() + digits.size(), t.int_value);
                if (ec != std::errc{}) {
                    lex_error(loc, "integer literal '" + digits + "' out of range");
                    t.type = TokenType::Error;
                }
            }
            tokens.push_back(std::move(t));
            continue;
        }
        if (c == '"') {
            cur.advance();
            std::string value;
            bool closed = false;
            while (!cur.done()) {
                char ch = cur.advance();
                if (ch == '"') {
                    closed = true;
                    break;
                }
                if (ch == '\n') break;
                if (ch == '\\') {
                    char esc = cur.done() ? '\0' : cur.advance();
                    switch (esc) {
                        case 'n': value.push_back('\n'); break;
                        case 't': value.push_back('\t'); break;
                        case '"': value.push_back('"'); break;
                        case '\\': value.push_back('\\'); break;
                        default:
                            lex_error(cur.loc(), std::string("unknown escape '\\") + esc + "'");
                            break;
                    }
                    continue;
                }
                value.push_back(ch);
            }
            if (!closed) lex_error(loc, "unterminated string literal");
            Token t;
            t.type = closed ? TokenType::String : TokenType::Error;
            t.text = std::move(value);
            t.loc = loc;
            tokens.push_back(std::move(t));
            continue;
        }

        cur.advance();
        switch (c) {
            case '{': push(TokenType::LBrace, "{", loc); break;
            case '}': push(TokenType::RBrace, "}", loc); break;
            case '(': push(TokenType::LParen, "(", loc); break;
            case ')': push(TokenType::RParen, ")", loc); break;
            case '[': push(TokenType::LBracket, "[", loc); break;
            case ']': push(TokenType::RBracket, "]", loc); break;
            case ':': push(TokenType::Colon, ":", loc); break;
            case ',': push(TokenType::Comma, ",", loc); break;
            case '.': push(TokenType::Dot, ".", loc); break;
            case '-':
                if (cur.peek() == '>') {
                    cur.advance();
                    push(TokenType::Arrow, "->", loc);
                } else {
                    push(TokenType::Minus, "-", loc);
                }
                break;
            case '=':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenType::EqEq, "==", loc);
                } else {
                    push(TokenType::Assign, "=", loc);
                }
                break;
            case '!':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenType::NotEq, "!=", loc);
                } else {
                    lex_error(loc, "stray '!' (did you mean '!='?)");
                    push(TokenType::Error, "!", loc);
                }
                break;
            case '<':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenType::LessEq, "<=", loc);
                } else {
                    push(TokenType::Less, "<", loc);
                }
                break;
            case '>':
                if (cur.peek() == '=') {
                    cur.advance();
                    push(TokenType::GreaterEq, ">=", loc);
                } else {
                    push(TokenType::Greater, ">", loc);
                }
                break;
            default:
                lex_error(loc, std::string("unexpected character '") + c + "'");
                push(TokenType::Error, std::string(1, c), loc);
                break;
        }
    }

    Token eof;
    eof.type = TokenType::EndOfFile;
    eof.loc = cur.loc();
    tokens.push_back(std::move(eof));
    return tokens;
}

}  // namespace iotforge
