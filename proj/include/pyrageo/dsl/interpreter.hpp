#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "pyrageo/dsl/ast.hpp"
#include "pyrageo/geom.hpp"

namespace pyrageo::dsl {

class Value {
public:
    using Storage = std::variant<double, geom::Point, geom::Line, geom::Circle, geom::Angle>;

    Value(double v) : v_(v) {}
    Value(geom::Point v) : v_(v) {}
    Value(geom::Line v) : v_(v) {}
    Value(geom::Circle v) : v_(v) {}
    Value(geom::Angle v) : v_(v) {}

    BindKind kind() const;
    const Storage& storage() const { return v_; }

    template <class T>
    bool is() const { return std::holds_alternative<T>(v_); }
    template <class T>
    const T& as() const { return std::get<T>(v_); }

    // Numbers as-is, angles in degrees. Throws std::bad_variant_access otherwise.
    double scalar() const;

private:
    Storage v_;
};

const char* type_name(BindKind kind);

// Insertion-ordered identifier table. Iteration order is binding order.
class Env {
public:
    struct Entry {
        std::string name;
        Value value;
        SourcePos pos;
    };

    // Throws Diagnostic when `name` is already bound.
    void bind(const std::string& name, Value value, SourcePos pos);
    const Value* find(const std::string& name) const;
    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Supplies values for `monument.dimension[source]` references. Returning
// nullopt makes the evaluator raise "unknown measurement".
using MeasureResolver = std::function<std::optional<Value>(const MeasureRef&)>;

// Evaluates one expression against an environment. Throws Diagnostic on
// unbound names, type or arity errors, division by zero and degenerate
// geometry.
Value evaluate_expression(const Expr& e, const Env& env, const MeasureResolver& resolver = {});

struct AssertionResult {
    SourcePos pos;
    std::string text;  // canonical source of the assertion
    double actual = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct EvalResult {
    Env env;
    std::vector<AssertionResult> assertions;

    bool pass() const;
};

// Left-to-right evaluation. `assert approx(a, b, tol)` passes iff
// |a - b| <= tol * max(|b|, 1); angles are compared in degrees.
EvalResult evaluate(const Program& program, const MeasureResolver& resolver = {});

// Names accepted in call position.
const std::vector<std::string>& builtin_names();

}  // namespace pyrageo::dsl
