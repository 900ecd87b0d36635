#pragma once

// 2D Euclidean primitives for ruler-and-compass constructions.
//
// Everything here is a value type; operations are free functions and never
// mutate their inputs. Lengths are in unitless construction units.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pyrageo::geom {

inline constexpr double kPi = 3.14159265358979323846;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when two circles coincide: the intersection is the whole circle.
class CoincidentCircles : public GeometryError {
public:
    CoincidentCircles() : GeometryError("coincident circles have infinitely many intersection points") {}
};

struct Tolerance {
    double absolute = 1e-9;
    double relative = 1e-12;

    // Validating factory; the default-constructed value is always valid.
    static Tolerance make(double absolute, double relative);
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool finite() const;
    friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(Point a, Point b);
Point operator-(Point a, Point b);
Point operator*(double s, Point p);
double dot(Point a, Point b);
double cross(Point a, Point b);
double norm(Point v);
double distance(Point p, Point q);

// Infinite line: anchor plus unit direction. Points on the line are
// anchor + t * direction; t is the "parameter" used to order intersections.
class Line {
public:
    static Line through(Point p, Point q, const Tolerance& tol = {});
    static Line from_direction(Point anchor, double dx, double dy, const Tolerance& tol = {});

    Point anchor() const { return anchor_; }
    Point direction() const { return direction_; }
    Point at(double t) const;
    double parameter_of(Point p) const;
    double distance_to(Point p) const;

private:
    Line(Point anchor, Point direction) : anchor_(anchor), direction_(direction) {}
    Point anchor_;
    Point direction_;
};

class Circle {
public:
    Circle(Point center, double radius);

    Point center() const { return center_; }
    double radius() const { return radius_; }

private:
    Point center_;
    double radius_;
};

struct Dms {
    int degrees = 0;
    int minutes = 0;
    double seconds = 0.0;

    friend bool operator==(const Dms&, const Dms&) = default;
};

// Undirected angle stored in radians, normalized to [0, 2*pi).
class Angle {
public:
    Angle() = default;
    static Angle from_radians(double rad);
    static Angle from_degrees(double deg);
    // Requires deg >= 0, 0 <= min < 60, 0 <= sec < 60.
    static Angle from_dms(int deg, int min, double sec);

    double radians() const { return rad_; }
    double degrees() const;
    // Seconds are rounded to `second_decimals` places; carries propagate.
    Dms to_dms(int second_decimals = 0) const;

private:
    explicit Angle(double rad) : rad_(rad) {}
    double rad_ = 0.0;
};

std::string to_string(const Dms& dms);

std::optional<Point> intersect(const Line& a, const Line& b, const Tolerance& tol = {});
// 0, 1 or 2 points ordered by parameter along the line.
std::vector<Point> intersect(const Line& l, const Circle& c, const Tolerance& tol = {});
// 0, 1 or 2 points. With u the unit vector from a's center to b's, the point
// on the right of u comes first. Throws CoincidentCircles.
std::vector<Point> intersect(const Circle& a, const Circle& b, const Tolerance& tol = {});

Point midpoint(Point p, Point q, const Tolerance& tol = {});
Line perpendicular_at(const Line& l, Point p);
Line perpendicular_bisector(Point p, Point q, const Tolerance& tol = {});

// Non-reflex angle p-vertex-q in [0, pi]. Exactly symmetric in p and q.
Angle angle_at(Point vertex, Point p, Point q, const Tolerance& tol = {});

}  // namespace pyrageo::geom
