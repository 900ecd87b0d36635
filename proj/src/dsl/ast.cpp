#include "pyrageo/dsl/ast.hpp"

#include <charconv>
#include <system_error>

namespace pyrageo::dsl {

Diagnostic::Diagnostic(SourcePos pos, std::string message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(std::move(message)) {}

std::string Diagnostic::format(const std::string& file) const {
    return file + ":" + std::to_string(pos_.line) + ":" + std::to_string(pos_.column) + ": error: " + message_;
}

const char* keyword(BindKind kind) {
    switch (kind) {
        case BindKind::Point: return "point";
        case BindKind::Line: return "line";
        case BindKind::Circle: return "circle";
        case BindKind::Num: return "num";
        case BindKind::Angle: return "angle";
    }
    return "?";
}

namespace {

// Binding strength used for parenthesization; mirrors the grammar levels.
enum Prec { kAdd = 1, kMul = 2, kUnary = 3, kPow = 4, kAtom = 5 };

int precedence(const Expr& e) {
    if (const auto* b = std::get_if<Binary>(&e.node)) {
        switch (b->op) {
            case '+':
            case '-': return kAdd;
            case '*':
            case '/': return kMul;
            default: return kPow;
        }
    }
    if (std::holds_alternative<Unary>(e.node)) return kUnary;
    return kAtom;
}

std::string number_text(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string wrap(const Expr& e, bool parens) {
    return parens ? "(" + print(e) + ")" : print(e);
}

struct Printer {
    std::string operator()(const NumberLit& n) const {
        return n.degrees ? number_text(n.value) + " deg" : number_text(n.value);
    }
    std::string operator()(const Ident& i) const { return i.name; }
    std::string operator()(const MeasureRef& m) const {
        std::string s = m.monument + "." + m.dimension;
        if (!m.source.empty()) s += "[" + m.source + "]";
        return s;
    }
    std::string operator()(const Call& c) const {
        std::string s = c.name + "(";
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            if (i) s += ", ";
            s += print(*c.args[i]);
        }
        return s + ")";
    }
    std::string operator()(const Tuple& t) const { return "(" + print(*t.x) + ", " + print(*t.y) + ")"; }
    std::string operator()(const Unary& u) const {
        return std::string(1, u.op) + wrap(*u.operand, precedence(*u.operand) < kUnary);
    }
    std::string operator()(const Binary& b) const {
        const int p = precedence(Expr{{}, b});
        bool left_parens = false;
        bool right_parens = false;
        if (b.op == '^') {
            left_parens = precedence(*b.lhs) <= kPow;
            right_parens = precedence(*b.rhs) < kUnary;
        } else {
            left_parens = precedence(*b.lhs) < p;
            right_parens = precedence(*b.rhs) <= p;
        }
        return wrap(*b.lhs, left_parens) + " " + b.op + " " + wrap(*b.rhs, right_parens);
    }
};

bool same(const ExprPtr& a, const ExprPtr& b) { return a && b && same_structure(*a, *b); }

struct SameNode {
    const Expr& other;
    bool operator()(const NumberLit& n) const {
        const auto& o = std::get<NumberLit>(other.node);
        return n.value == o.value && n.degrees == o.degrees;
    }
    bool operator()(const Ident& i) const { return i.name == std::get<Ident>(other.node).name; }
    bool operator()(const MeasureRef& m) const {
        const auto& o = std::get<MeasureRef>(other.node);
        return m.monument == o.monument && m.dimension == o.dimension && m.source == o.source;
    }
    bool operator()(const Call& c) const {
        const auto& o = std::get<Call>(other.node);
        if (c.name != o.name || c.args.size() != o.args.size()) return false;
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            if (!same(c.args[i], o.args[i])) return false;
        }
        return true;
    }
    bool operator()(const Tuple& t) const {
        const auto& o = std::get<Tuple>(other.node);
        return same(t.x, o.x) && same(t.y, o.y);
    }
    bool operator()(const Unary& u) const {
        const auto& o = std::get<Unary>(other.node);
        return u.op == o.op && same(u.operand, o.operand);
    }
    bool operator()(const Binary& b) const {
        const auto& o = std::get<Binary>(other.node);
        return b.op == o.op && same(b.lhs, o.lhs) && same(b.rhs, o.rhs);
    }
};

}  // namespace

std::string print(const Expr& e) { return std::visit(Printer{}, e.node); }

std::string print(const Stmt& s) {
    if (const auto* b = std::get_if<Binding>(&s)) {
        return std::string(keyword(b->kind)) + " " + b->name + " = " + print(*b->value);
    }
    const auto& a = std::get<Assert>(s);
    return "assert approx(" + print(*a.actual) + ", " + print(*a.expected) + ", " + print(*a.tolerance) + ")";
}

std::string print(const Program& p) {
    std::string out;
    for (const auto& s : p.statements) {
        out += print(s);
        out += '\n';
    }
    return out;
}

bool same_structure(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(SameNode{b}, a.node);
}

bool same_structure(const Program& a, const Program& b) {
    if (a.statements.size() != b.statements.size()) return false;
    for (std::size_t i = 0; i < a.statements.size(); ++i) {
        const auto& x = a.statements[i];
        const auto& y = b.statements[i];
        if (x.index() != y.index()) return false;
        if (const auto* bx = std::get_if<Binding>(&x)) {
            const auto& by = std::get<Binding>(y);
            if (bx->kind != by.kind || bx->name != by.name || !same(bx->value, by.value)) return false;
        } else {
            const auto& ax = std::get<Assert>(x);
            const auto& ay = std::get<Assert>(y);
            if (!same(ax.actual, ay.actual) || !same(ax.expected, ay.expected) ||
                !same(ax.tolerance, ay.tolerance)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pyrageo::dsl
