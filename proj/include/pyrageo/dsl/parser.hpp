#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pyrageo/dsl/ast.hpp"

namespace pyrageo::dsl {

enum class TokenKind { Number, Ident, LParen, RParen, LBracket, RBracket, Comma, Dot, Equals, Semicolon, Op, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    SourcePos pos;
};

// '#' starts a comment running to end of line. Throws Diagnostic on a
// character that cannot start a token.
std::vector<Token> tokenize(std::string_view source);

// Throws Diagnostic (with line/column) on any syntax error.
Program parse(std::string_view source);

// A single expression, as used by claim definitions.
ExprPtr parse_expression(std::string_view source);

}  // namespace pyrageo::dsl
