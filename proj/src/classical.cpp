#include "pyrageo/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace pyrageo::classical {

using geom::Angle;
using geom::Circle;
using geom::kPi;
using geom::Line;
using geom::Point;

SphereMetrics sphere_metrics(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("sphere radius must be positive");
    }
    SphereMetrics m;
    m.radius = radius;
    m.circumference = 2.0 * kPi * radius;
    m.area = 4.0 * kPi * radius * radius;
    m.volume = 4.0 * kPi * radius * radius * radius / 3.0;
    return m;
}

DuplicationResult duplication_check(double edge_small, double edge_large) {
    if (!(edge_small > 0.0) || !(edge_large > 0.0)) {
        throw DomainError("cube edges must be positive");
    }
    const double q = edge_large / edge_small;
    DuplicationResult r;
    r.ratio = q * q * q;
    r.rel_err_vs_2 = std::abs(r.ratio - 2.0) / 2.0;
    return r;
}

double cubature_radius_exact(double edge) {
    if (!(edge > 0.0) || !std::isfinite(edge)) {
        throw DomainError("cube edge must be positive");
    }
    return edge * std::cbrt(3.0 / (4.0 * kPi));
}

EgyptianCubature cubature_radius_egyptian() {
    EgyptianCubature e;
    e.radius = 50.0 * 280.0 / 226.0;
    e.exact_radius = cubature_radius_exact(100.0);
    e.rel_err_vs_exact = std::abs(e.radius - e.exact_radius) / e.exact_radius;
    const double cube = 1e6;
    e.volume_rel_err = std::abs(sphere_metrics(e.radius).volume - cube) / cube;
    return e;
}

// ---------------------------------------------------------------------------
// Trisection

namespace {

struct Layout {
    double unit;
    Point a;
    Point c;
    Line ig;  // perpendicular to AC through its midpoint
    Line ck;  // from C at inclination theta
};

Layout make_layout(Angle theta, double unit) {
    const double deg = theta.degrees();
    if (!(deg > 0.0 && deg < 180.0)) {
        throw DomainError("trisection angle must lie strictly between 0 and 180 degrees");
    }
    if (!(unit > 0.0) || !std::isfinite(unit)) {
        throw DomainError("trisection unit must be positive");
    }
    const Point c{0.0, 0.0};
    const Point a{-unit, 0.0};
    const Point i = geom::midpoint(a, c);
    const Line ac = Line::through(a, c);
    return Layout{unit, a, c, geom::perpendicular_at(ac, i),
                  Line::from_direction(c, std::cos(theta.radians()), std::sin(theta.radians()))};
}

// Point of CK at distance r from C, on the side of increasing parameter.
Point carry_onto_ck(const Layout& lay, double r) {
    const auto pts = geom::intersect(lay.ck, Circle(lay.c, r));
    return pts.back();
}

TrisectionRow make_row(const Layout& lay, std::string label, double ix, double cx, Point t) {
    TrisectionRow row;
    row.label = std::move(label);
    row.ix = ix;
    row.cx = cx;
    row.height_t = t.y;
    row.proj_at = t.x - lay.a.x;
    row.third_deg = geom::angle_at(lay.a, lay.c, t).degrees();
    return row;
}

// Intersection of T A with IG; the intersection always exists because T lies
// above AD.
Point cycle_x(const Layout& lay, Point t) {
    const auto x = geom::intersect(Line::through(t, lay.a), lay.ig);
    if (!x) throw DomainError("trisection line TA parallel to IG");
    return *x;
}

TrisectionTrace run(Angle theta, double unit, double eps_deg, int max_iter, bool fixed) {
    if (!(eps_deg > 0.0)) throw DomainError("trisection eps must be positive");
    if (max_iter < 0) throw DomainError("trisection cycle count must be non-negative");
    const Layout lay = make_layout(theta, unit);

    TrisectionTrace trace;
    trace.theta = theta;
    trace.unit = unit;

    double r = unit / 2.0;
    Point t = carry_onto_ck(lay, r);
    trace.rows.push_back(make_row(lay, "S", 0.0, r, t));

    for (int n = 1; n <= max_iter; ++n) {
        const Point x = cycle_x(lay, t);
        r = geom::distance(lay.c, x);
        t = carry_onto_ck(lay, r);
        trace.rows.push_back(make_row(lay, "T" + std::to_string(n), std::abs(x.y), r, t));
        const double step = std::abs(trace.rows[n].third_deg - trace.rows[n - 1].third_deg);
        trace.converged = step < eps_deg;
        if (trace.converged && !fixed) break;
    }
    trace.final_third = Angle::from_degrees(trace.rows.back().third_deg);
    return trace;
}

}  // namespace

TrisectionTrace trisect_iterative(Angle theta, double unit, double eps_deg, int max_iter) {
    return run(theta, unit, eps_deg, max_iter, false);
}

TrisectionTrace trisect_cycles(Angle theta, double unit, int cycles, double eps_deg) {
    return run(theta, unit, eps_deg, cycles, true);
}

ArchimedesReport archimedes_limit_check(const TrisectionTrace& trace, double tol_rad) {
    if (!trace.converged) {
        throw DomainError("archimedes check needs a converged trisection trace");
    }
    const Layout lay = make_layout(trace.theta, trace.unit);
    const Point t = carry_onto_ck(lay, trace.rows.back().cx);
    const Point x = cycle_x(lay, t);
    const Point i = geom::midpoint(lay.a, lay.c);
    const Point d{trace.unit, 0.0};
    const Point l = lay.c - (x - lay.c);
    const double a = trace.final_third.radians();

    ArchimedesReport rep;
    rep.third = trace.final_third;
    auto check = [&](std::string name, double measured, double expected) {
        IdentityCheck ic;
        ic.name = std::move(name);
        ic.measured_rad = measured;
        ic.expected_rad = expected;
        ic.error_rad = std::abs(measured - expected);
        ic.pass = ic.error_rad <= tol_rad;
        rep.identities.push_back(ic);
    };
    check("XAI = a", geom::angle_at(lay.a, x, i).radians(), a);
    check("XCI = a", geom::angle_at(lay.c, x, i).radians(), a);
    check("TXC = 2a", geom::angle_at(x, t, lay.c).radians(), 2.0 * a);
    check("TCL = 4a", geom::angle_at(lay.c, t, l).radians(), 4.0 * a);
    check("DCL = a", geom::angle_at(lay.c, d, l).radians(), a);
    check("TCD = 3a", geom::angle_at(lay.c, t, d).radians(), 3.0 * a);
    rep.all_pass = true;
    for (const auto& ic : rep.identities) rep.all_pass = rep.all_pass && ic.pass;
    return rep;
}

ArchimedesReport archimedes_limit_check(Angle theta, double tol_rad) {
    return archimedes_limit_check(trisect_iterative(theta, 1.0, 1e-12, 500), tol_rad);
}

// ---------------------------------------------------------------------------
// Triples

namespace {

std::int64_t checked_affine(std::int64_t p, std::int64_t x, std::int64_t q, std::int64_t y,
                            std::int64_t k) {
    std::int64_t px, qy, s, out;
    if (__builtin_mul_overflow(p, x, &px) || __builtin_mul_overflow(q, y, &qy) ||
        __builtin_add_overflow(px, qy, &s) || __builtin_add_overflow(s, k, &out)) {
        throw std::overflow_error("consecutive-leg triple exceeds 64-bit range");
    }
    return out;
}

}  // namespace

bool is_pythagorean(const Triple& t) {
    using wide = __int128;
    return wide(t.a) * t.a + wide(t.b) * t.b == wide(t.c) * t.c;
}

std::vector<Triple> consecutive_leg_triples(int n) {
    if (n < 1) throw DomainError("triple count must be at least 1");
    std::vector<Triple> out;
    out.reserve(static_cast<std::size_t>(n));
    Triple cur{3, 4, 5};
    out.push_back(cur);
    while (static_cast<int>(out.size()) < n) {
        const std::int64_t a = checked_affine(3, cur.a, 2, cur.c, 1);
        const std::int64_t c = checked_affine(4, cur.a, 3, cur.c, 2);
        cur = Triple{a, a + 1, c};
        out.push_back(cur);
    }
    return out;
}

}  // namespace pyrageo::classical
