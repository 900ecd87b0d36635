#pragma once

// Syntax tree of the construction-script language (.geo files).
//
//   program  := stmt* ;                       (';' separators are optional)
//   stmt     := binding | assert ;
//   binding  := ("point"|"line"|"circle"|"num"|"angle") IDENT "=" expr ;
//   assert   := "assert" "approx" "(" expr "," expr "," expr ")" ;
//   expr     := term (("+"|"-") term)* ;
//   term     := unary (("*"|"/") unary)* ;
//   unary    := "-" unary | power ;
//   power    := primary ("^" unary)? ;
//   primary  := NUMBER ["deg"] | IDENT "(" [expr ("," expr)*] ")"
//             | IDENT ["." IDENT ["[" IDENT "]"]]
//             | "(" expr ")" | "(" expr "," expr ")" ;
//
// `monument.dimension[source]` references are only meaningful when the
// evaluator is given a measurement resolver (claim evaluation).

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pyrageo::dsl {

struct SourcePos {
    int line = 1;
    int column = 1;

    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

// Positioned error raised by the lexer, parser and evaluator.
class Diagnostic : public std::runtime_error {
public:
    Diagnostic(SourcePos pos, std::string message);

    SourcePos pos() const { return pos_; }
    const std::string& message() const { return message_; }
    // "file:line:col: error: message"
    std::string format(const std::string& file) const;

private:
    SourcePos pos_;
    std::string message_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NumberLit {
    double value = 0.0;
    bool degrees = false;  // "<number> deg" builds an angle
};

struct Ident {
    std::string name;
};

struct MeasureRef {
    std::string monument;
    std::string dimension;
    std::string source;  // empty when not given
};

struct Call {
    std::string name;
    std::vector<ExprPtr> args;
};

struct Tuple {
    ExprPtr x;
    ExprPtr y;
};

struct Unary {
    char op = '-';
    ExprPtr operand;
};

struct Binary {
    char op = '+';
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Expr {
    SourcePos pos;
    std::variant<NumberLit, Ident, MeasureRef, Call, Tuple, Unary, Binary> node;
};

enum class BindKind { Point, Line, Circle, Num, Angle };

const char* keyword(BindKind kind);

struct Binding {
    SourcePos pos;
    BindKind kind = BindKind::Num;
    std::string name;
    ExprPtr value;
};

struct Assert {
    SourcePos pos;
    ExprPtr actual;
    ExprPtr expected;
    ExprPtr tolerance;
};

using Stmt = std::variant<Binding, Assert>;

struct Program {
    std::vector<Stmt> statements;
};

// Canonical source text. Re-parsing the output gives a structurally equal
// tree (positions aside).
std::string print(const Expr& e);
std::string print(const Stmt& s);
std::string print(const Program& p);

// Structural equality ignoring source positions.
bool same_structure(const Expr& a, const Expr& b);
bool same_structure(const Program& a, const Program& b);

}  // namespace pyrageo::dsl
