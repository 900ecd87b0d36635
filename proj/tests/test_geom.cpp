#include <doctest.h>

#include <cmath>
#include <random>

#include "pyrageo/geom.hpp"

using namespace pyrageo::geom;

namespace {

const Line kXAxis = Line::from_direction({0, 0}, 1, 0);
const Line kYAxis = Line::from_direction({0, 0}, 0, 1);

double deg(double d) { return d * kPi / 180.0; }

}  // namespace

TEST_CASE("line-line intersection") {
    auto p = intersect(kXAxis, kYAxis);
    REQUIRE(p);
    CHECK(p->x == doctest::Approx(0.0));
    CHECK(p->y == doctest::Approx(0.0));

    SUBCASE("line from A through S meets the mid-perpendicular at the first IX") {
        const Point a{-100, 0};
        const Point s{50 * std::cos(deg(54.46222)), 50 * std::sin(deg(54.46222))};
        const Line ig = Line::from_direction({-50, 0}, 0, 1);
        auto r = intersect(Line::through(s, a), ig);
        REQUIRE(r);
        CHECK(r->x == doctest::Approx(-50.0));
        CHECK(std::abs(r->y - 15.76243) < 1e-3);
    }

    SUBCASE("parallel lines") {
        CHECK_FALSE(intersect(kXAxis, Line::from_direction({0, 3}, -2, 0)));
    }

    SUBCASE("degenerate line input") {
        CHECK_THROWS_AS(Line::through({1, 1}, {1, 1}), GeometryError);
        CHECK_THROWS_AS(Line::from_direction({0, 0}, 0, 0), GeometryError);
        CHECK_THROWS_AS(Line::through({NAN, 0}, {1, 1}), GeometryError);
    }
}

TEST_CASE("line-circle intersection") {
    const Circle unit({0, 0}, 1.0);
    auto pts = intersect(kXAxis, unit);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x == doctest::Approx(-1.0));
    CHECK(pts[1].x == doctest::Approx(1.0));

    const Line ck = Line::from_direction({0, 0}, std::cos(deg(54.46222)), std::sin(deg(54.46222)));
    pts = intersect(ck, Circle({0, 0}, 50));
    REQUIRE(pts.size() == 2);
    CHECK(std::abs(pts[1].y - 40.68662) < 1e-4);
    CHECK(pts[0].y < 0.0);

    CHECK(intersect(Line::from_direction({0, 2}, 1, 0), unit).empty());

    SUBCASE("tangent collapses to one point") {
        auto t = intersect(Line::from_direction({5, 1}, -1, 0), unit);
        REQUIRE(t.size() == 1);
        CHECK(t[0].x == doctest::Approx(0.0));
        CHECK(t[0].y == doctest::Approx(1.0));
    }
}

TEST_CASE("circle-circle intersection") {
    const Circle a({0, 0}, 1.0);
    auto tangent = intersect(a, Circle({2, 0}, 1.0));
    REQUIRE(tangent.size() == 1);
    CHECK(tangent[0].x == doctest::Approx(1.0));
    CHECK(tangent[0].y == doctest::Approx(0.0));

    auto eq = intersect(a, Circle({1, 0}, 1.0));
    REQUIRE(eq.size() == 2);
    CHECK(eq[0].x == doctest::Approx(0.5));
    CHECK(eq[0].y == doctest::Approx(-std::sqrt(3.0) / 2));
    CHECK(eq[1].y == doctest::Approx(std::sqrt(3.0) / 2));

    CHECK(intersect(a, Circle({5, 0}, 1.0)).empty());
    CHECK(intersect(a, Circle({0, 0}, 2.0)).empty());
    CHECK_THROWS_AS(intersect(a, Circle({0, 0}, 1.0)), CoincidentCircles);
    CHECK_THROWS_AS(Circle({0, 0}, 0.0), GeometryError);
    CHECK_THROWS_AS(Circle({0, 0}, -1.0), GeometryError);
}

TEST_CASE("midpoint and perpendiculars") {
    const Point i = midpoint({-100, 0}, {0, 0});
    CHECK(i.x == doctest::Approx(-50.0));
    CHECK(i.y == doctest::Approx(0.0));
    CHECK_THROWS_AS(midpoint({1, 2}, {1, 2}), GeometryError);

    const Line p = perpendicular_at(kXAxis, {0, 0});
    CHECK(std::abs(p.direction().x) < 1e-15);
    CHECK(std::abs(p.direction().y) == doctest::Approx(1.0));
    CHECK(p.distance_to({0, 7}) < 1e-12);

    const Line b = perpendicular_bisector({0, 0}, {2, 0});
    CHECK(b.distance_to({1, 0}) < 1e-12);
    CHECK(b.distance_to({1, -5}) < 1e-12);
    CHECK(std::abs(b.direction().x) < 1e-15);
    CHECK_THROWS_AS(perpendicular_bisector({3, 3}, {3, 3}), GeometryError);
}

TEST_CASE("angle_at") {
    CHECK(angle_at({0, 0}, {1, 0}, {0, 1}).degrees() == doctest::Approx(90.0));

    // Landing height 92.15 over a horizontal reach of 280 seen from A.
    const Angle bad = angle_at({-100, 0}, {180, 0}, {180, 92.15});
    CHECK(std::abs(bad.degrees() - 18.2167) < 1e-4);

    const Angle kcd = angle_at({0, 0}, {180, 0}, {180, 252});
    CHECK(kcd.degrees() == doctest::Approx(std::atan2(1.4, 1.0) * 180.0 / kPi).epsilon(1e-14));
    CHECK(std::abs(kcd.degrees() - 54.46232) < 1e-5);

    CHECK(angle_at({0, 0}, {1, 0}, {-1, 0}).degrees() == doctest::Approx(180.0));
    CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 0}), GeometryError);
}

TEST_CASE("dms conversions") {
    CHECK(std::abs(Angle::from_dms(54, 27, 44).degrees() - 54.462222) < 5e-7);
    CHECK(std::abs(Angle::from_dms(18, 9, 15).degrees() - 18.154167) < 5e-7);
    CHECK(Angle::from_dms(0, 0, 0).degrees() == 0.0);
    CHECK(Angle::from_dms(54, 27, 44).to_dms() == Dms{54, 27, 44.0});
    CHECK(Angle::from_degrees(18.22).to_dms() == Dms{18, 13, 12.0});
    CHECK(Angle::from_degrees(359.99999999).to_dms() == Dms{0, 0, 0.0});
    CHECK(to_string(Dms{54, 27, 44.0}) == "54°27′44″");

    CHECK_THROWS_AS(Angle::from_dms(10, 60, 0), GeometryError);
    CHECK_THROWS_AS(Angle::from_dms(10, 0, 60), GeometryError);
    CHECK_THROWS_AS(Angle::from_dms(-1, 0, 0), GeometryError);
    CHECK_THROWS_AS(Angle::from_dms(10, -1, 0), GeometryError);
}

TEST_CASE("angle normalization") {
    CHECK(Angle::from_degrees(-90).degrees() == doctest::Approx(270.0));
    CHECK(Angle::from_degrees(720).degrees() == doctest::Approx(0.0));
    CHECK(Angle::from_radians(2 * kPi).radians() == 0.0);
    CHECK_THROWS_AS(Angle::from_degrees(INFINITY), GeometryError);
}

TEST_CASE("tolerance validation") {
    CHECK_NOTHROW(Tolerance::make(1e-6, 1e-9));
    CHECK_THROWS_AS(Tolerance::make(0.0, 1e-9), GeometryError);
    CHECK_THROWS_AS(Tolerance::make(1e-6, -1.0), GeometryError);
}

TEST_CASE("property: intersections satisfy both loci") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-100, 100);
    std::uniform_real_distribution<double> rad(0.5, 80);
    const Tolerance tol;
    for (int i = 0; i < 500; ++i) {
        const Point p{coord(rng), coord(rng)};
        const Point q{coord(rng), coord(rng)};
        const Line l = Line::through(p, q);
        const Circle c({coord(rng), coord(rng)}, rad(rng));
        const Circle d({coord(rng), coord(rng)}, rad(rng));
        for (const Point& x : intersect(l, c)) {
            CHECK(l.distance_to(x) <= tol.absolute);
            CHECK(std::abs(distance(x, c.center()) - c.radius()) <= tol.absolute);
        }
        const auto lc = intersect(l, c);
        if (lc.size() == 2) CHECK(l.parameter_of(lc[0]) < l.parameter_of(lc[1]));
        for (const Point& x : intersect(c, d)) {
            CHECK(std::abs(distance(x, c.center()) - c.radius()) <= tol.absolute);
            CHECK(std::abs(distance(x, d.center()) - d.radius()) <= tol.absolute);
        }
        const Line m = Line::through({coord(rng), coord(rng)}, {coord(rng), coord(rng)});
        if (auto x = intersect(l, m)) {
            CHECK(l.distance_to(*x) <= tol.absolute);
            CHECK(m.distance_to(*x) <= tol.absolute);
        }
    }
}

TEST_CASE("property: angle_at symmetric and invariant under similarity") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-50, 50);
    std::uniform_real_distribution<double> turn(0, 2 * kPi);
    std::uniform_real_distribution<double> scale(0.1, 10);
    for (int i = 0; i < 500; ++i) {
        const Point v{coord(rng), coord(rng)}, p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)};
        const double a = angle_at(v, p, q).radians();
        CHECK(a == angle_at(v, q, p).radians());
        const double th = turn(rng), s = scale(rng);
        const Point shift{coord(rng), coord(rng)};
        auto move = [&](Point x) {
            return Point{s * (std::cos(th) * x.x - std::sin(th) * x.y) + shift.x,
                         s * (std::sin(th) * x.x + std::cos(th) * x.y) + shift.y};
        };
        CHECK(std::abs(angle_at(move(v), move(p), move(q)).radians() - a) <= 1e-9);
    }
}

TEST_CASE("property: perpendicular bisector through midpoint at a right angle") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-100, 100);
    for (int i = 0; i < 500; ++i) {
        const Point p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)};
        const Line b = perpendicular_bisector(p, q);
        const Point m = midpoint(p, q);
        CHECK(b.distance_to(m) <= 1e-9);
        CHECK(std::abs(distance(m, p) - distance(m, q)) <= 1e-9);
        const double cosang = dot(b.direction(), Line::through(p, q).direction());
        CHECK(std::abs(std::asin(std::min(1.0, std::abs(cosang)))) <= 1e-9);
    }
}

TEST_CASE("property: dms round trip at one-second granularity") {
    for (int total = 0; total < 360 * 3600; total += 97) {
        const Dms in{total / 3600, (total / 60) % 60, static_cast<double>(total % 60)};
        CHECK(Angle::from_dms(in.degrees, in.minutes, in.seconds).to_dms() == in);
    }
}
