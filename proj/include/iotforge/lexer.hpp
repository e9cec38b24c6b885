#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iotforge/diagnostics.hpp"
#include "iotforge/model.hpp"

namespace iotforge {

enum class TokenType {
    Identifier,
    Keyword,
    Integer,
    Float,
    String,
    LBrace,
    RBrace,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Colon,
    Comma,
    Dot,
    Assign,  // =
    Arrow,   // ->
    Minus,
    EqEq,
    NotEq,
    Less,
    LessEq,
    Greater,
    GreaterEq,
    EndOfFile,
    Error,
};

struct Token {
    TokenType type = TokenType::Error;
    std::string text;
    std::int64_t int_value = 0;
    double float_value = 0.0;
    SourceLoc loc;

    bool is_keyword(std::string_view kw) const {
        return type == TokenType::Keyword && text == kw;
    }
};

bool is_reserved_word(std::string_view word);

/// Tokenizes the whole input. Lexical problems (stray characters,
/// unterminated strings, malformed numbers) become E_LEX diagnostics and a
/// best-effort Error token so the parser can resynchronize.
std::vector<Token> tokenize(std::string_view text, std::vector<Diagnostic>& diagnostics);

}  // namespace iotforge
