#pragma once

#include <cstddef>
#include <vector>

#include "socs/core.hpp"

namespace socs {

struct Point2 {
    double x = 0.0, y = 0.0;
};

// Free perpendicular-direction choices made while constructing a polygon:
// one bit per side a+2..b (first arm, in construction order) followed by one
// per side c-1..b+1 (second arm). false = the new vertex is taken clockwise
// about O, true = counter-clockwise.
struct TurnSequence {
    std::vector<bool> bits;
};

// Closed polygon: vertices[0] is the distinguished vertex O, side i runs from
// vertices[i] to vertices[(i+1) % n] and is meant to have integer length
// side_targets[i]; the targets are the consecutive run a+1..c.
struct PolygonPath {
    std::vector<Point2> vertices;
    std::vector<BigInt> side_targets;
    std::size_t origin_index = 0;
    // Relative mismatch of the two arm endpoints before coalescing (always 0
    // for the chainsaw, which places the far vertex once).
    double closure_residual = 0.0;
};

struct PolygonReport {
    double max_side_residual = 0.0;   // relative, against side_targets
    double max_perp_residual = 0.0;   // normalized dot product
    std::vector<std::size_t> degenerate_vertices;
    bool self_intersecting = false;
    int mu = 0;                       // count of reflex interior angles
    bool convex = false;              // mu == 0 and not self-intersecting
    double closure_residual = 0.0;
};

// Relative tolerance for side lengths and closure.
inline constexpr double kLengthTol = 1e-9;
// Angular tolerance (radians) for degenerate-vertex detection.
inline constexpr double kDegenerateTol = 1e-6;

// Two-arm construction: arm 1 walks sides a+1..b east-then-per-bit, arm 2
// walks sides c..b+1 west-then-per-bit; both arm endpoints land at distance
// sqrt(P_b - P_a) from O and arm 2 is rigidly rotated about O until they
// coalesce. If the angle at O ends up degenerate, the bit for side b is
// flipped and the closure redone. turns.bits must have length c-a-2.
PolygonPath construct_generic(const SolutionTriple& t, const TurnSequence& turns);

// Chainsaw construction: both arms walk concentric circles around O via
// tangent steps, the lower arm strictly below the x-axis and the upper arm
// strictly above, stepping toward the axis on ties; the last two upper-arm
// steps are steered into the sector {|x| < y} (for c-a >= 15) so a
// non-degenerate final vertex always exists. Never self-intersecting.
PolygonPath construct_chainsaw(const SolutionTriple& t);

// From q (|q| > r_in) to the point X on the circle of radius r_in such that
// segment qX is tangent to the circle at X: X = r_in R(+-alpha) q/|q| with
// alpha = arccos(r_in/|q|). Then |X| = r_in, (X-q).X = 0 and
// |X-q|^2 = |q|^2 - r_in^2. Throws std::domain_error if |q| <= r_in.
Point2 tangent_step(const Point2& q, double r_in, bool counter_clockwise);

// Checks side lengths against targets, the perpendicular-diagonal property,
// vertex degeneracy, pairwise self-intersection (exact predicates on the
// double coordinates), and reflex-angle count; convex = (mu == 0 and not
// self-intersecting). All findings go in the report.
PolygonReport validate(const PolygonPath& path, const SolutionTriple& t);

// sqrt(N)/(pi sqrt(3)) - 4/(pi sqrt(3N)) - 2: every N-sided arithmetic
// polygon has at least this many reflex angles. N >= 3.
double mu_lower_bound(long N);

// floor(8 + 3 pi^2 (nu+2)^2): an arithmetic polygon with mu <= nu has at
// most this many sides.
long convexity_side_cap(long nu);

// Exact squared diagonal from O to each vertex (index 1..c-a-1): prefix sums
// of squared side lengths along the owning arm, P_{a+v} - P_a up to the
// coalesced vertex and P_c - P_{a+v} past it.
std::vector<BigInt> exact_squared_diagonals(const SolutionTriple& t);

// Largest relative mismatch between each vertex's squared distance from O
// (computed in doubles) and its exact integer value.
double max_diagonal_residual(const PolygonPath& path, const SolutionTriple& t);

// |angle between v_i - O and v_{i+1} - O| for consecutive vertices of the
// upper (second) arm, in traversal order from the coalesced vertex to the
// last vertex before O. Empty when c - b = 1.
std::vector<double> upper_arm_angular_steps(const PolygonPath& path, const SolutionTriple& t);

}  // namespace socs
