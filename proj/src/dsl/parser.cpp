#include "pyrageo/dsl/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

namespace pyrageo::dsl {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::End: return "end of input";
        case TokenKind::Number: return "number '" + t.text + "'";
        case TokenKind::Ident: return "identifier '" + t.text + "'";
        default: return "'" + t.text + "'";
    }
}

bool is_bind_keyword(const std::string& s, BindKind& kind) {
    if (s == "point") kind = BindKind::Point;
    else if (s == "line") kind = BindKind::Line;
    else if (s == "circle") kind = BindKind::Circle;
    else if (s == "num") kind = BindKind::Num;
    else if (s == "angle") kind = BindKind::Angle;
    else return false;
    return true;
}

bool is_reserved(const std::string& s) {
    BindKind k;
    return is_bind_keyword(s, k) || s == "assert" || s == "approx" || s == "deg";
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Program program() {
        Program p;
        while (!at(TokenKind::End)) {
            if (accept(TokenKind::Semicolon)) continue;
            p.statements.push_back(statement());
        }
        return p;
    }

    ExprPtr lone_expression() {
        ExprPtr e = expr();
        if (!at(TokenKind::End)) fail("unexpected " + describe(peek()) + " after expression");
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    bool at(TokenKind k) const { return peek().kind == k; }
    bool at_op(char op) const { return at(TokenKind::Op) && peek().text[0] == op; }
    const Token& advance() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool accept(TokenKind k) {
        if (!at(k)) return false;
        advance();
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw Diagnostic(peek().pos, msg); }
    const Token& expect(TokenKind k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what + ", found " + describe(peek()));
        return advance();
    }
    std::string expect_name(const char* what) {
        const Token& t = expect(TokenKind::Ident, what);
        if (is_reserved(t.text)) throw Diagnostic(t.pos, "reserved word '" + t.text + "' cannot be used as " + what);
        return t.text;
    }

    Stmt statement() {
        const Token& head = peek();
        if (head.kind != TokenKind::Ident) fail("expected a statement, found " + describe(head));
        BindKind kind;
        if (is_bind_keyword(head.text, kind)) {
            advance();
            Binding b;
            b.pos = head.pos;
            b.kind = kind;
            b.name = expect_name("a binding name");
            expect(TokenKind::Equals, "'='");
            b.value = expr();
            return b;
        }
        if (head.text == "assert") {
            advance();
            Assert a;
            a.pos = head.pos;
            const Token& ap = expect(TokenKind::Ident, "'approx'");
            if (ap.text != "approx") throw Diagnostic(ap.pos, "expected 'approx' after 'assert'");
            expect(TokenKind::LParen, "'('");
            a.actual = expr();
            expect(TokenKind::Comma, "','");
            a.expected = expr();
            expect(TokenKind::Comma, "','");
            a.tolerance = expr();
            expect(TokenKind::RParen, "')'");
            return a;
        }
        fail("expected 'point', 'line', 'circle', 'num', 'angle' or 'assert', found " + describe(head));
    }

    static ExprPtr make(SourcePos pos, decltype(Expr::node) node) {
        return std::make_shared<const Expr>(Expr{pos, std::move(node)});
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (at_op('+') || at_op('-')) {
            const Token& op = advance();
            lhs = make(op.pos, Binary{op.text[0], lhs, term()});
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (at_op('*') || at_op('/')) {
            const Token& op = advance();
            lhs = make(op.pos, Binary{op.text[0], lhs, unary()});
        }
        return lhs;
    }

    ExprPtr unary() {
        if (at_op('-')) {
            const Token& op = advance();
            return make(op.pos, Unary{'-', unary()});
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (at_op('^')) {
            const Token& op = advance();
            return make(op.pos, Binary{'^', base, unary()});
        }
        return base;
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Number: {
                advance();
                NumberLit n;
                const char* first = t.text.data();
                const char* last = first + t.text.size();
                auto res = std::from_chars(first, last, n.value);
                if (res.ec != std::errc() || res.ptr != last || !std::isfinite(n.value)) {
                    throw Diagnostic(t.pos, "invalid number '" + t.text + "'");
                }
                if (at(TokenKind::Ident) && peek().text == "deg") {
                    advance();
                    n.degrees = true;
                }
                return make(t.pos, n);
            }
            case TokenKind::Ident: {
                const bool builtin_keyword = (t.text == "point" || t.text == "line" || t.text == "circle" || t.text == "deg") &&
                                             peek(1).kind == TokenKind::LParen;
                if (is_reserved(t.text) && !builtin_keyword) {
                    fail("unexpected keyword '" + t.text + "' in expression");
                }
                advance();
                if (accept(TokenKind::LParen)) {
                    Call c;
                    c.name = t.text;
                    if (!at(TokenKind::RParen)) {
                        c.args.push_back(expr());
                        while (accept(TokenKind::Comma)) c.args.push_back(expr());
                    }
                    expect(TokenKind::RParen, "')' to close the argument list");
                    return make(t.pos, std::move(c));
                }
                if (accept(TokenKind::Dot)) {
                    MeasureRef m;
                    m.monument = t.text;
                    m.dimension = expect_name("a dimension name");
                    if (accept(TokenKind::LBracket)) {
                        m.source = expect_name("a source name");
                        expect(TokenKind::RBracket, "']'");
                    }
                    return make(t.pos, std::move(m));
                }
                return make(t.pos, Ident{t.text});
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr first = expr();
                if (accept(TokenKind::Comma)) {
                    ExprPtr second = expr();
                    expect(TokenKind::RParen, "')' to close the coordinate pair");
                    return make(t.pos, Tuple{first, second});
                }
                expect(TokenKind::RParen, "')'");
                return first;
            }
            default: fail("expected an expression, found " + describe(t));
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    SourcePos pos;
    std::size_t i = 0;
    auto bump = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++pos.line;
                pos.column = 1;
            } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
                ++pos.column;  // count UTF-8 code points, not bytes
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            bump(1);
            continue;
        }
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') bump(1);
            continue;
        }
        Token t;
        t.pos = pos;
        std::size_t len = 1;
        if (digit(c) || (c == '.' && i + 1 < src.size() && digit(src[i + 1]))) {
            std::size_t j = i;
            while (j < src.size() && digit(src[j])) ++j;
            if (j < src.size() && src[j] == '.') {
                ++j;
                while (j < src.size() && digit(src[j])) ++j;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
                if (k < src.size() && digit(src[k])) {
                    while (k < src.size() && digit(src[k])) ++k;
                    j = k;
                }
            }
            t.kind = TokenKind::Number;
            len = j - i;
        } else if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            t.kind = TokenKind::Ident;
            len = j - i;
        } else {
            switch (c) {
                case '(': t.kind = TokenKind::LParen; break;
                case ')': t.kind = TokenKind::RParen; break;
                case '[': t.kind = TokenKind::LBracket; break;
                case ']': t.kind = TokenKind::RBracket; break;
                case ',': t.kind = TokenKind::Comma; break;
                case '.': t.kind = TokenKind::Dot; break;
                case '=': t.kind = TokenKind::Equals; break;
                case ';': t.kind = TokenKind::Semicolon; break;
                case '+':
                case '-':
                case '*':
                case '/':
                case '^': t.kind = TokenKind::Op; break;
                default: {
                    std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "\\x" + std::to_string(static_cast<unsigned char>(c));
                    throw Diagnostic(pos, "unexpected character '" + shown + "'");
                }
            }
        }
        t.text = std::string(src.substr(i, len));
        bump(len);
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = TokenKind::End;
    end.pos = pos;
    out.push_back(end);
    return out;
}

Program parse(std::string_view source) { return Parser(source).program(); }

ExprPtr parse_expression(std::string_view source) { return Parser(source).lone_expression(); }

}  // namespace pyrageo::dsl
