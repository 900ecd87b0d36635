#include "pyrageo/dsl/interpreter.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "pyrageo/classical.hpp"

namespace pyrageo::dsl {

using geom::Angle;
using geom::Circle;
using geom::Line;
using geom::Point;

BindKind Value::kind() const {
    switch (v_.index()) {
        case 0: return BindKind::Num;
        case 1: return BindKind::Point;
        case 2: return BindKind::Line;
        case 3: return BindKind::Circle;
        default: return BindKind::Angle;
    }
}

double Value::scalar() const {
    if (const auto* a = std::get_if<Angle>(&v_)) return a->degrees();
    return std::get<double>(v_);
}

const char* type_name(BindKind kind) {
    switch (kind) {
        case BindKind::Num: return "number";
        default: return keyword(kind);
    }
}

void Env::bind(const std::string& name, Value value, SourcePos pos) {
    if (index_.count(name)) {
        throw Diagnostic(pos, "identifier '" + name + "' is already bound");
    }
    index_.emplace(name, entries_.size());
    entries_.push_back(Entry{name, std::move(value), pos});
}

const Value* Env::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &entries_[it->second].value;
}

bool EvalResult::pass() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.pass; });
}

namespace {

using Args = std::vector<Value>;

template <class T>
constexpr const char* name_of() {
    if constexpr (std::is_same_v<T, double>) return "number";
    else if constexpr (std::is_same_v<T, Point>) return "point";
    else if constexpr (std::is_same_v<T, Line>) return "line";
    else if constexpr (std::is_same_v<T, Circle>) return "circle";
    else return "angle";
}

struct CallCtx {
    const std::string& name;
    const Args& args;
    SourcePos pos;

    template <class T>
    const T& arg(std::size_t i) const {
        if (!args[i].is<T>()) {
            throw Diagnostic(pos, name + ": argument " + std::to_string(i + 1) + " must be a " + name_of<T>() +
                                      ", got " + type_name(args[i].kind()));
        }
        return args[i].as<T>();
    }

    double num(std::size_t i) const { return arg<double>(i); }
};

struct Builtin {
    std::size_t min_args;
    std::size_t max_args;
    Value (*fn)(const CallCtx&);
};

Value b_point(const CallCtx& c) { return Point{c.num(0), c.num(1)}; }
Value b_midpoint(const CallCtx& c) { return geom::midpoint(c.arg<Point>(0), c.arg<Point>(1)); }
Value b_line(const CallCtx& c) { return Line::through(c.arg<Point>(0), c.arg<Point>(1)); }

Value b_ray(const CallCtx& c) {
    const Angle& a = c.arg<Angle>(1);
    return Line::from_direction(c.arg<Point>(0), std::cos(a.radians()), std::sin(a.radians()));
}

Value b_circle(const CallCtx& c) {
    const Point& center = c.arg<Point>(0);
    if (c.args[1].is<Point>()) return Circle(center, geom::distance(center, c.args[1].as<Point>()));
    return Circle(center, c.num(1));
}

Value b_perp_at(const CallCtx& c) { return geom::perpendicular_at(c.arg<Line>(0), c.arg<Point>(1)); }
Value b_perp_bisector(const CallCtx& c) { return geom::perpendicular_bisector(c.arg<Point>(0), c.arg<Point>(1)); }

Value b_intersect(const CallCtx& c) {
    std::vector<Point> pts;
    const Value& a = c.args[0];
    const Value& b = c.args[1];
    if (a.is<Line>() && b.is<Line>()) {
        if (auto p = geom::intersect(a.as<Line>(), b.as<Line>())) pts.push_back(*p);
    } else if (a.is<Line>() && b.is<Circle>()) {
        pts = geom::intersect(a.as<Line>(), b.as<Circle>());
    } else if (a.is<Circle>() && b.is<Line>()) {
        pts = geom::intersect(b.as<Line>(), a.as<Circle>());
    } else if (a.is<Circle>() && b.is<Circle>()) {
        pts = geom::intersect(a.as<Circle>(), b.as<Circle>());
    } else {
        throw Diagnostic(c.pos, std::string("intersect: expects lines or circles, got ") + type_name(a.kind()) +
                                    " and " + type_name(b.kind()));
    }
    double index = 0.0;
    if (c.args.size() == 3) index = c.num(2);
    if (index != std::floor(index) || index < 0.0) {
        throw Diagnostic(c.pos, "intersect: index must be a non-negative integer");
    }
    if (pts.empty()) throw Diagnostic(c.pos, "intersect: empty intersection");
    if (index >= static_cast<double>(pts.size())) {
        throw Diagnostic(c.pos, "intersect: index " + std::to_string(static_cast<int>(index)) + " out of range (" +
                                    std::to_string(pts.size()) + " point(s))");
    }
    return pts[static_cast<std::size_t>(index)];
}

Value b_dist(const CallCtx& c) { return geom::distance(c.arg<Point>(0), c.arg<Point>(1)); }
Value b_angle_at(const CallCtx& c) {
    return geom::angle_at(c.arg<Point>(0), c.arg<Point>(1), c.arg<Point>(2));
}
Value b_sphere_vol(const CallCtx& c) { return classical::sphere_metrics(c.num(0)).volume; }
Value b_sphere_area(const CallCtx& c) { return classical::sphere_metrics(c.num(0)).area; }
Value b_circle_circ(const CallCtx& c) { return classical::sphere_metrics(c.num(0)).circumference; }

Value b_sqrt(const CallCtx& c) {
    if (c.num(0) < 0.0) throw Diagnostic(c.pos, "sqrt of a negative number");
    return std::sqrt(c.num(0));
}
Value b_cbrt(const CallCtx& c) { return std::cbrt(c.num(0)); }
Value b_abs(const CallCtx& c) { return std::abs(c.num(0)); }
Value b_pi(const CallCtx&) { return geom::kPi; }

Value b_dms(const CallCtx& c) {
    const double d = c.num(0);
    const double m = c.num(1);
    if (d != std::floor(d) || m != std::floor(m)) {
        throw Diagnostic(c.pos, "dms: degrees and minutes must be integers");
    }
    if (d > 1e6) throw Diagnostic(c.pos, "dms: degrees out of range");
    return Angle::from_dms(static_cast<int>(d), static_cast<int>(m), c.num(2));
}

Value b_deg(const CallCtx& c) { return c.arg<Angle>(0).degrees(); }
Value b_x(const CallCtx& c) { return c.arg<Point>(0).x; }
Value b_y(const CallCtx& c) { return c.arg<Point>(0).y; }

const std::map<std::string, Builtin>& builtins() {
    static const std::map<std::string, Builtin> table = {
        {"point", {2, 2, b_point}},
        {"midpoint", {2, 2, b_midpoint}},
        {"line", {2, 2, b_line}},
        {"ray", {2, 2, b_ray}},
        {"circle", {2, 2, b_circle}},
        {"perp_at", {2, 2, b_perp_at}},
        {"perp_bisector", {2, 2, b_perp_bisector}},
        {"intersect", {2, 3, b_intersect}},
        {"dist", {2, 2, b_dist}},
        {"angle_at", {3, 3, b_angle_at}},
        {"sphere_vol", {1, 1, b_sphere_vol}},
        {"sphere_area", {1, 1, b_sphere_area}},
        {"circle_circ", {1, 1, b_circle_circ}},
        {"sqrt", {1, 1, b_sqrt}},
        {"cbrt", {1, 1, b_cbrt}},
        {"abs", {1, 1, b_abs}},
        {"pi", {0, 0, b_pi}},
        {"dms", {3, 3, b_dms}},
        {"deg", {1, 1, b_deg}},
        {"x", {1, 1, b_x}},
        {"y", {1, 1, b_y}},
    };
    return table;
}

Value finite_or_throw(double v, SourcePos pos) {
    if (!std::isfinite(v)) throw Diagnostic(pos, "arithmetic result is not finite");
    return v;
}

Value binary(char op, const Value& l, const Value& r, SourcePos pos) {
    const bool ln = l.is<double>();
    const bool rn = r.is<double>();
    const bool la = l.is<Angle>();
    const bool ra = r.is<Angle>();
    if (op == '/' && ((rn && r.as<double>() == 0.0) || (ra && r.as<Angle>().radians() == 0.0))) {
        throw Diagnostic(pos, "division by zero");
    }
    if (ln && rn) {
        const double a = l.as<double>();
        const double b = r.as<double>();
        switch (op) {
            case '+': return finite_or_throw(a + b, pos);
            case '-': return finite_or_throw(a - b, pos);
            case '*': return finite_or_throw(a * b, pos);
            case '/': return finite_or_throw(a / b, pos);
            case '^': return finite_or_throw(std::pow(a, b), pos);
        }
    }
    if (la && ra) {
        const double a = l.as<Angle>().radians();
        const double b = r.as<Angle>().radians();
        if (op == '+') return Angle::from_radians(a + b);
        if (op == '-') return Angle::from_radians(a - b);
        if (op == '/') return a / b;
    }
    if (la && rn && (op == '*' || op == '/')) {
        const double a = l.as<Angle>().radians();
        const double b = r.as<double>();
        return Angle::from_radians(op == '*' ? a * b : a / b);
    }
    if (ln && ra && op == '*') {
        return Angle::from_radians(l.as<double>() * r.as<Angle>().radians());
    }
    throw Diagnostic(pos, std::string("operator '") + op + "' not defined for " + type_name(l.kind()) + " and " +
                              type_name(r.kind()));
}

struct Evaluator {
    const Env& env;
    const MeasureResolver& resolver;

    Value eval(const Expr& e) const {
        try {
            return std::visit([&](const auto& n) { return eval_node(n, e.pos); }, e.node);
        } catch (const Diagnostic&) {
            throw;
        } catch (const std::exception& ex) {
            // Kernel and domain errors surface at the expression that triggered them.
            throw Diagnostic(e.pos, ex.what());
        }
    }

    Value eval_node(const NumberLit& n, SourcePos) const {
        if (n.degrees) return Angle::from_degrees(n.value);
        return n.value;
    }

    Value eval_node(const Ident& i, SourcePos pos) const {
        if (const Value* v = env.find(i.name)) return *v;
        if (i.name == "pi") return geom::kPi;
        throw Diagnostic(pos, "unbound identifier '" + i.name + "'");
    }

    Value eval_node(const MeasureRef& m, SourcePos pos) const {
        std::string key = m.monument + "." + m.dimension;
        if (!m.source.empty()) key += "[" + m.source + "]";
        if (!resolver) throw Diagnostic(pos, "measurement reference '" + key + "' outside claim evaluation");
        if (auto v = resolver(m)) return *v;
        throw Diagnostic(pos, "unknown measurement '" + key + "'");
    }

    Value eval_node(const Call& c, SourcePos pos) const {
        const auto& table = builtins();
        auto it = table.find(c.name);
        if (it == table.end()) throw Diagnostic(pos, "unknown builtin '" + c.name + "'");
        const Builtin& b = it->second;
        if (c.args.size() < b.min_args || c.args.size() > b.max_args) {
            std::string want = std::to_string(b.min_args);
            if (b.max_args != b.min_args) want += " or " + std::to_string(b.max_args);
            throw Diagnostic(pos, c.name + ": expects " + want + " argument(s), got " + std::to_string(c.args.size()));
        }
        Args args;
        args.reserve(c.args.size());
        for (const auto& a : c.args) args.push_back(eval(*a));
        return b.fn(CallCtx{c.name, args, pos});
    }

    Value eval_node(const Tuple& t, SourcePos pos) const {
        const Value x = eval(*t.x);
        const Value y = eval(*t.y);
        if (!x.is<double>() || !y.is<double>()) throw Diagnostic(pos, "coordinate pair needs two numbers");
        return Point{x.as<double>(), y.as<double>()};
    }

    Value eval_node(const Unary& u, SourcePos pos) const {
        const Value v = eval(*u.operand);
        if (v.is<double>()) return -v.as<double>();
        if (v.is<Angle>()) return Angle::from_radians(-v.as<Angle>().radians());
        throw Diagnostic(pos, std::string("cannot negate a ") + type_name(v.kind()));
    }

    Value eval_node(const Binary& b, SourcePos pos) const { return binary(b.op, eval(*b.lhs), eval(*b.rhs), pos); }
};

}  // namespace

Value evaluate_expression(const Expr& e, const Env& env, const MeasureResolver& resolver) {
    return Evaluator{env, resolver}.eval(e);
}

EvalResult evaluate(const Program& program, const MeasureResolver& resolver) {
    EvalResult out;
    for (const auto& stmt : program.statements) {
        const Evaluator ev{out.env, resolver};
        if (const auto* b = std::get_if<Binding>(&stmt)) {
            Value v = ev.eval(*b->value);
            if (v.kind() != b->kind) {
                throw Diagnostic(b->pos, std::string("type mismatch: '") + b->name + "' declared " +
                                             keyword(b->kind) + " but bound to a " + type_name(v.kind()));
            }
            out.env.bind(b->name, std::move(v), b->pos);
            continue;
        }
        const auto& a = std::get<Assert>(stmt);
        const Value actual = ev.eval(*a.actual);
        const Value expected = ev.eval(*a.expected);
        const Value tol = ev.eval(*a.tolerance);
        const bool scalar_pair = (actual.is<double>() && expected.is<double>()) ||
                                 (actual.is<Angle>() && expected.is<Angle>());
        if (!scalar_pair) {
            throw Diagnostic(a.pos, std::string("approx compares two numbers or two angles, got ") +
                                        type_name(actual.kind()) + " and " + type_name(expected.kind()));
        }
        if (!tol.is<double>() || tol.as<double>() < 0.0) {
            throw Diagnostic(a.tolerance->pos, "approx tolerance must be a non-negative number");
        }
        AssertionResult r;
        r.pos = a.pos;
        r.text = print(stmt);
        r.actual = actual.scalar();
        r.expected = expected.scalar();
        r.tolerance = tol.as<double>();
        r.pass = std::abs(r.actual - r.expected) <= r.tolerance * std::max(std::abs(r.expected), 1.0);
        out.assertions.push_back(std::move(r));
    }
    return out;
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, v] : builtins()) n.push_back(k);
        return n;
    }();
    return names;
}

}  // namespace pyrageo::dsl
