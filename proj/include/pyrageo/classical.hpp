#pragma once

// The classical problems: sphere measures, cube duplication, sphere
// cubature, iterative angle trisection and consecutive-leg Pythagorean
// triples. pi is always the true constant; approximate constructions are
// measured against it.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pyrageo/geom.hpp"

namespace pyrageo::classical {

class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SphereMetrics {
    double radius = 0.0;
    double circumference = 0.0;  // of a great circle
    double area = 0.0;
    double volume = 0.0;
};

SphereMetrics sphere_metrics(double radius);

struct DuplicationResult {
    double ratio = 0.0;         // edge_large^3 / edge_small^3
    double rel_err_vs_2 = 0.0;  // |ratio - 2| / 2
};

DuplicationResult duplication_check(double edge_small, double edge_large);

// Radius of the sphere whose volume equals edge^3.
double cubature_radius_exact(double edge);

// The fixed construction r = 50 * 280 / 226 for a cube of edge 100.
struct EgyptianCubature {
    double radius = 0.0;
    double exact_radius = 0.0;
    double rel_err_vs_exact = 0.0;
    double volume_rel_err = 0.0;  // |4/3 pi r^3 - 10^6| / 10^6
};

EgyptianCubature cubature_radius_egyptian();

// ---------------------------------------------------------------------------
// Iterative trisection
//
// Layout: C at the origin, A at (-unit, 0), I the midpoint of AC with the
// vertical IG through it, CK the ray from C at inclination theta. S is on CK
// with CS = unit/2. Each cycle draws T_n A, intersects it with IG at X_n and
// carries CX_n back onto CK to get T_{n+1}. The angle T_n A C tends to the
// fixed point a with sin 2a = sin(theta - a), i.e. a = theta/3 or
// a = 180deg - theta. Starting from CS = unit/2 the estimates increase to the
// smaller root, so the construction trisects for theta < 135deg and settles on
// 180deg - theta above it.

struct TrisectionRow {
    std::string label;       // "S", "T1", "T2", ...
    double ix = 0.0;         // |IX| of the previous cycle (0 for S)
    double cx = 0.0;         // |CT| carried onto CK
    double height_t = 0.0;   // height of T above AD
    double proj_at = 0.0;    // horizontal projection of AT
    double third_deg = 0.0;  // angle TAC in degrees
};

struct TrisectionTrace {
    geom::Angle theta;
    double unit = 100.0;
    std::vector<TrisectionRow> rows;
    bool converged = false;
    geom::Angle final_third;
};

inline constexpr double kDefaultTrisectionEpsDeg = 1e-7;
inline constexpr int kDefaultTrisectionMaxIter = 100;

// Stops once two successive third-angle estimates differ by less than
// eps_deg; otherwise returns after max_iter cycles with converged = false.
TrisectionTrace trisect_iterative(geom::Angle theta, double unit = 100.0,
                                  double eps_deg = kDefaultTrisectionEpsDeg,
                                  int max_iter = kDefaultTrisectionMaxIter);

// Exactly `cycles` rows after S, regardless of convergence. `converged`
// reports whether the last step moved less than eps_deg.
TrisectionTrace trisect_cycles(geom::Angle theta, double unit, int cycles,
                               double eps_deg = kDefaultTrisectionEpsDeg);

struct IdentityCheck {
    std::string name;  // e.g. "TCD = 3a"
    double measured_rad = 0.0;
    double expected_rad = 0.0;
    double error_rad = 0.0;
    bool pass = false;
};

struct ArchimedesReport {
    geom::Angle third;
    std::vector<IdentityCheck> identities;
    bool all_pass = false;
};

inline constexpr double kArchimedesTolRad = 1e-6;

// Evaluates the five angle relations of the limiting configuration
// (XAI = XCI = a, TXC = 2a, TCL = 4a, DCL = a, TCD = 3a) where L is
// vertically opposite X through C. Throws DomainError on a non-converged
// trace.
ArchimedesReport archimedes_limit_check(const TrisectionTrace& trace,
                                        double tol_rad = kArchimedesTolRad);
// Runs a tight trisection first (eps 1e-12 deg, 500 cycles).
ArchimedesReport archimedes_limit_check(geom::Angle theta, double tol_rad = kArchimedesTolRad);

// ---------------------------------------------------------------------------
// Consecutive-leg Pythagorean triples

struct Triple {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const Triple&, const Triple&) = default;
};

// First n triples (a, a+1, c) from (3,4,5) via
//   a' = 3a + 2c + 1,  c' = 4a + 3c + 2.
// Throws std::overflow_error once a triple no longer fits in 64 bits.
std::vector<Triple> consecutive_leg_triples(int n);

bool is_pythagorean(const Triple& t);

}  // namespace pyrageo::classical
