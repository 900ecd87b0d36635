#include "pyrageo/geom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace pyrageo::geom {

namespace {

void require_finite(Point p, const char* what) {
    if (!p.finite()) {
        throw GeometryError(std::string(what) + ": non-finite coordinate");
    }
}

}  // namespace

Tolerance Tolerance::make(double absolute, double relative) {
    if (!(absolute > 0.0) || !(relative > 0.0)) {
        throw GeometryError("tolerance components must be strictly positive");
    }
    return Tolerance{absolute, relative};
}

bool Point::finite() const { return std::isfinite(x) && std::isfinite(y); }

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point v) { return std::hypot(v.x, v.y); }
double distance(Point p, Point q) { return norm(q - p); }

// ---------------------------------------------------------------------------
// Line / Circle

Line Line::through(Point p, Point q, const Tolerance& tol) {
    require_finite(p, "line");
    require_finite(q, "line");
    const Point d = q - p;
    const double len = norm(d);
    if (len <= tol.absolute) {
        throw GeometryError("line through coincident points");
    }
    return Line(p, (1.0 / len) * d);
}

Line Line::from_direction(Point anchor, double dx, double dy, const Tolerance& tol) {
    require_finite(anchor, "line");
    const Point d{dx, dy};
    require_finite(d, "line direction");
    const double len = norm(d);
    if (len <= tol.absolute) {
        throw GeometryError("line direction has zero length");
    }
    return Line(anchor, (1.0 / len) * d);
}

Point Line::at(double t) const { return anchor_ + t * direction_; }

double Line::parameter_of(Point p) const { return dot(p - anchor_, direction_); }

double Line::distance_to(Point p) const { return std::abs(cross(direction_, p - anchor_)); }

Circle::Circle(Point center, double radius) : center_(center), radius_(radius) {
    require_finite(center, "circle");
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw GeometryError("circle radius must be strictly positive");
    }
}

// ---------------------------------------------------------------------------
// Angle

Angle Angle::from_radians(double rad) {
    if (!std::isfinite(rad)) {
        throw GeometryError("angle must be finite");
    }
    constexpr double two_pi = 2.0 * kPi;
    double r = std::fmod(rad, two_pi);
    if (r < 0.0) r += two_pi;
    if (r >= two_pi) r = 0.0;
    return Angle(r);
}

Angle Angle::from_degrees(double deg) {
    if (!std::isfinite(deg)) {
        throw GeometryError("angle must be finite");
    }
    double d = std::fmod(deg, 360.0);
    if (d < 0.0) d += 360.0;
    return from_radians(d * kPi / 180.0);
}

Angle Angle::from_dms(int deg, int min, double sec) {
    if (deg < 0 || min < 0 || min >= 60 || !(sec >= 0.0) || !(sec < 60.0)) {
        throw GeometryError("dms components out of range (deg >= 0, 0 <= min < 60, 0 <= sec < 60)");
    }
    return from_degrees(deg + min / 60.0 + sec / 3600.0);
}

double Angle::degrees() const { return rad_ * 180.0 / kPi; }

Dms Angle::to_dms(int second_decimals) const {
    if (second_decimals < 0 || second_decimals > 6) {
        throw GeometryError("dms precision must be between 0 and 6 decimals");
    }
    const auto scale = static_cast<std::int64_t>(std::llround(std::pow(10.0, second_decimals)));
    auto total = static_cast<std::int64_t>(std::llround(degrees() * 3600.0 * static_cast<double>(scale)));
    total %= 360LL * 3600LL * scale;
    Dms out;
    out.degrees = static_cast<int>(total / (3600 * scale));
    total -= static_cast<std::int64_t>(out.degrees) * 3600 * scale;
    out.minutes = static_cast<int>(total / (60 * scale));
    total -= static_cast<std::int64_t>(out.minutes) * 60 * scale;
    out.seconds = static_cast<double>(total) / static_cast<double>(scale);
    return out;
}

std::string to_string(const Dms& dms) {
    char buf[64];
    if (dms.seconds == std::floor(dms.seconds)) {
        std::snprintf(buf, sizeof buf, "%d°%d′%.0f″", dms.degrees, dms.minutes, dms.seconds);
    } else {
        std::snprintf(buf, sizeof buf, "%d°%d′%g″", dms.degrees, dms.minutes, dms.seconds);
    }
    return buf;
}

// ---------------------------------------------------------------------------
// Intersections

std::optional<Point> intersect(const Line& a, const Line& b, const Tolerance& tol) {
    const double denom = cross(a.direction(), b.direction());
    if (std::abs(denom) <= tol.absolute) {
        return std::nullopt;
    }
    const double t = cross(b.anchor() - a.anchor(), b.direction()) / denom;
    return a.at(t);
}

std::vector<Point> intersect(const Line& l, const Circle& c, const Tolerance& tol) {
    const double t0 = l.parameter_of(c.center());
    const Point foot = l.at(t0);
    const double h = distance(foot, c.center());
    const double r = c.radius();
    const double disc = (r - h) * (r + h);
    const double tol2 = tol.absolute * tol.absolute;
    if (disc < -tol2) return {};
    if (disc <= tol2) return {foot};
    const double s = std::sqrt(disc);
    return {l.at(t0 - s), l.at(t0 + s)};
}

std::vector<Point> intersect(const Circle& a, const Circle& b, const Tolerance& tol) {
    const Point delta = b.center() - a.center();
    const double d = norm(delta);
    if (d <= tol.absolute) {
        if (std::abs(a.radius() - b.radius()) <= tol.absolute) throw CoincidentCircles();
        return {};  // concentric
    }
    const double ra = a.radius();
    const double rb = b.radius();
    const double along = (d * d + ra * ra - rb * rb) / (2.0 * d);
    const double h2 = ra * ra - along * along;
    const double tol2 = tol.absolute * tol.absolute;
    const Point u = (1.0 / d) * delta;
    const Point base = a.center() + along * u;
    if (h2 < -tol2) return {};
    if (h2 <= tol2) return {base};
    const double h = std::sqrt(h2);
    const Point left{-u.y, u.x};
    return {base - h * left, base + h * left};
}

// ---------------------------------------------------------------------------
// Constructions

Point midpoint(Point p, Point q, const Tolerance& tol) {
    require_finite(p, "midpoint");
    require_finite(q, "midpoint");
    if (distance(p, q) <= tol.absolute) {
        throw GeometryError("midpoint of coincident points");
    }
    return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
}

Line perpendicular_at(const Line& l, Point p) {
    const Point d = l.direction();
    return Line::from_direction(p, -d.y, d.x);
}

Line perpendicular_bisector(Point p, Point q, const Tolerance& tol) {
    const Point m = midpoint(p, q, tol);
    const Point d = q - p;
    return Line::from_direction(m, -d.y, d.x, tol);
}

Angle angle_at(Point vertex, Point p, Point q, const Tolerance& tol) {
    require_finite(vertex, "angle");
    require_finite(p, "angle");
    require_finite(q, "angle");
    // Canonical argument order makes the result bit-identical under p <-> q.
    if (q.x < p.x || (q.x == p.x && q.y < p.y)) std::swap(p, q);
    const Point u = p - vertex;
    const Point v = q - vertex;
    if (norm(u) <= tol.absolute || norm(v) <= tol.absolute) {
        throw GeometryError("angle with a side of zero length");
    }
    return Angle::from_radians(std::atan2(std::abs(cross(u, v)), dot(u, v)));
}

}  // namespace pyrageo::geom
