#include "socs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace socs {

namespace {

Point2 sub(const Point2& u, const Point2& v) { return {u.x - v.x, u.y - v.y}; }
Point2 add(const Point2& u, const Point2& v) { return {u.x + v.x, u.y + v.y}; }
Point2 scale(const Point2& v, double s) { return {v.x * s, v.y * s}; }
double dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }
double cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
double norm(const Point2& v) { return std::hypot(v.x, v.y); }
Point2 rot90(const Point2& v) { return {-v.y, v.x}; }

Point2 rotate(const Point2& v, double ct, double st) {
    return {ct * v.x - st * v.y, st * v.x + ct * v.y};
}

// Orientation sign of (q-p) x (r-p): adaptive double predicate with an exact
// rational fallback when the determinant is within rounding distance of
// zero. Doubles are dyadic rationals, so the fallback is exact.
int orient_sign(const Point2& p, const Point2& q, const Point2& r) {
    const double detleft = (q.x - p.x) * (r.y - p.y);
    const double detright = (q.y - p.y) * (r.x - p.x);
    const double det = detleft - detright;
    const double detsum = std::abs(detleft) + std::abs(detright);
    constexpr double errbound = 3.3306690738754716e-16;  // (3 + 16 eps) eps
    if (std::abs(det) > errbound * detsum) return det > 0 ? 1 : -1;
    using Q = Rational;
    Q d = (Q(q.x) - Q(p.x)) * (Q(r.y) - Q(p.y)) - (Q(q.y) - Q(p.y)) * (Q(r.x) - Q(p.x));
    if (d > 0) return 1;
    if (d < 0) return -1;
    return 0;
}

bool bbox_overlap(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    return std::max(std::min(a.x, b.x), std::min(c.x, d.x)) <=
               std::min(std::max(a.x, b.x), std::max(c.x, d.x)) &&
           std::max(std::min(a.y, b.y), std::min(c.y, d.y)) <=
               std::min(std::max(a.y, b.y), std::max(c.y, d.y));
}

bool point_in_bbox(const Point2& a, const Point2& b, const Point2& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Any shared point between closed segments (proper crossing, T-touch, or
// collinear overlap) counts.
bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    if (!bbox_overlap(a, b, c, d)) return false;
    int d1 = orient_sign(c, d, a);
    int d2 = orient_sign(c, d, b);
    int d3 = orient_sign(a, b, c);
    int d4 = orient_sign(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && point_in_bbox(c, d, a)) return true;
    if (d2 == 0 && point_in_bbox(c, d, b)) return true;
    if (d3 == 0 && point_in_bbox(a, b, c)) return true;
    if (d4 == 0 && point_in_bbox(a, b, d)) return true;
    return false;
}

double turn_angle(const Point2& prev, const Point2& v, const Point2& next) {
    Point2 u = sub(v, prev), w = sub(next, v);
    return std::atan2(cross(u, w), dot(u, w));
}

bool degenerate_polar_angle(const Point2& v) {
    double ang = std::abs(std::atan2(v.y, v.x));
    return ang < kDegenerateTol || std::numbers::pi - ang < kDegenerateTol;
}

// Vertex counts must stay addressable and side lengths exactly representable
// as doubles for the residual checks to mean anything.
void check_constructible(const SolutionTriple& t) {
    if (t.c - t.a > 10000000)
        throw std::domain_error("polygon has too many sides to construct");
    if (t.c > BigInt(1) << 50)
        throw std::domain_error("side lengths too large for double-precision construction");
}

struct GenericArms {
    std::vector<Point2> arm1;  // O, P_1 .. P_{b-a}
    std::vector<Point2> arm2;  // O, Q_1 .. Q_{c-b} (unrotated)
};

GenericArms build_arms(const SolutionTriple& t, const std::vector<bool>& bits) {
    const long a = t.a.convert_to<long>();
    const long c = t.c.convert_to<long>();
    const long ell = (t.b - t.a).convert_to<long>();
    const long m = (t.c - t.b).convert_to<long>();
    GenericArms arms;
    arms.arm1 = {{0.0, 0.0}, {static_cast<double>(a + 1), 0.0}};
    for (long j = 1; j < ell; ++j) {
        const Point2& v = arms.arm1.back();
        Point2 dir = scale(v, 1.0 / norm(v));
        Point2 perp = bits[static_cast<std::size_t>(j - 1)] ? rot90(dir) : scale(rot90(dir), -1.0);
        arms.arm1.push_back(add(v, scale(perp, static_cast<double>(a + 1 + j))));
    }
    arms.arm2 = {{0.0, 0.0}, {-static_cast<double>(c), 0.0}};
    for (long j = 1; j < m; ++j) {
        const Point2& v = arms.arm2.back();
        Point2 dir = scale(v, 1.0 / norm(v));
        Point2 perp = bits[static_cast<std::size_t>(ell - 1 + j - 1)] ? rot90(dir)
                                                                      : scale(rot90(dir), -1.0);
        arms.arm2.push_back(add(v, scale(perp, static_cast<double>(c - j))));
    }
    return arms;
}

PolygonPath assemble_generic(const SolutionTriple& t, const std::vector<bool>& bits) {
    const long ell = (t.b - t.a).convert_to<long>();
    const long m = (t.c - t.b).convert_to<long>();
    GenericArms arms = build_arms(t, bits);
    const Point2 e1 = arms.arm1.back();
    const Point2 e2 = arms.arm2.back();
    const double theta = std::atan2(e1.y, e1.x) - std::atan2(e2.y, e2.x);
    const double ct = std::cos(theta), st = std::sin(theta);

    PolygonPath path;
    path.vertices = arms.arm1;  // O, P_1 .. P_ell (P_ell is the coalesced vertex)
    for (long j = m - 1; j >= 1; --j)
        path.vertices.push_back(rotate(arms.arm2[static_cast<std::size_t>(j)], ct, st));
    path.closure_residual = norm(sub(rotate(e2, ct, st), e1)) / norm(e1);
    for (BigInt s = t.a + 1; s <= t.c; ++s) path.side_targets.push_back(s);
    return path;
}

bool origin_degenerate(const PolygonPath& path) {
    const std::size_t n = path.vertices.size();
    double turn = turn_angle(path.vertices[n - 1], path.vertices[0], path.vertices[1]);
    return std::abs(turn) < kDegenerateTol || std::numbers::pi - std::abs(turn) < kDegenerateTol;
}

}  // namespace

Point2 tangent_step(const Point2& q, double r_in, bool counter_clockwise) {
    const double nq = norm(q);
    if (!(nq > r_in) || !(r_in > 0))
        throw std::domain_error("tangent_step: need |q| > r_in > 0");
    const double alpha = std::acos(r_in / nq);
    const double s = counter_clockwise ? alpha : -alpha;
    return scale(rotate(scale(q, 1.0 / nq), std::cos(s), std::sin(s)), r_in);
}

PolygonPath construct_generic(const SolutionTriple& t, const TurnSequence& turns) {
    if (!is_socs_solution(t)) throw std::domain_error("construct_generic: not a solution triple");
    check_constructible(t);
    const long ell = (t.b - t.a).convert_to<long>();
    const std::size_t nbits = static_cast<std::size_t>((t.c - t.a).convert_to<long>() - 2);
    if (turns.bits.size() != nbits)
        throw std::domain_error("construct_generic: need exactly c-a-2 turn bits");

    PolygonPath path = assemble_generic(t, turns.bits);
    if (origin_degenerate(path)) {
        // Take the other choice for side b and redo the closure.
        std::vector<bool> flipped = turns.bits;
        flipped[static_cast<std::size_t>(ell - 2)] = !flipped[static_cast<std::size_t>(ell - 2)];
        path = assemble_generic(t, flipped);
    }
    return path;
}

namespace {

// Upper-arm selection for one chainsaw step. `level` is the circle index the
// step lands on (0 = the last vertex before O).
Point2 choose_upper(const Point2& cur, double r_in, long level, bool steer) {
    Point2 cand[2] = {tangent_step(cur, r_in, true), tangent_step(cur, r_in, false)};
    Point2 above[2];
    int n_above = 0;
    for (const Point2& x : cand)
        if (x.y > 0) above[n_above++] = x;
    if (n_above == 0) throw std::logic_error("chainsaw: no upper-arm candidate above the axis");
    if (n_above == 1) return above[0];
    if (steer && (level == 1 || level == 2)) {
        // Steer toward / within the sector {|x| < y}.
        return (std::abs(above[0].x) - above[0].y) < (std::abs(above[1].x) - above[1].y)
                   ? above[0]
                   : above[1];
    }
    if (level == 0) {
        // Final vertex: toward the axis unless that lands degenerate at O.
        Point2 lo = above[0].y < above[1].y ? above[0] : above[1];
        Point2 hi = above[0].y < above[1].y ? above[1] : above[0];
        return degenerate_polar_angle(lo) ? hi : lo;
    }
    return above[0].y < above[1].y ? above[0] : above[1];  // toward the axis
}

// Exhaustive upper-arm search for the small cases (c-a <= 14): try all
// direction choices, keeping every vertex strictly above the axis, and
// return the first arm whose final vertex is not degenerate at O.
bool upper_exhaustive(std::vector<Point2>& arm, const std::vector<double>& radii, long level) {
    if (level < 0) return !degenerate_polar_angle(arm.back());
    for (bool ccw : {true, false}) {
        Point2 x = tangent_step(arm.back(), radii[static_cast<std::size_t>(level)], ccw);
        if (!(x.y > 0)) continue;
        arm.push_back(x);
        if (upper_exhaustive(arm, radii, level - 1)) return true;
        arm.pop_back();
    }
    return false;
}

}  // namespace

PolygonPath construct_chainsaw(const SolutionTriple& t) {
    if (!is_socs_solution(t)) throw std::domain_error("construct_chainsaw: not a solution triple");
    check_constructible(t);
    const long a = t.a.convert_to<long>();
    const long c = t.c.convert_to<long>();
    const long ell = (t.b - t.a).convert_to<long>();
    const long m = (t.c - t.b).convert_to<long>();
    const long N = c - a;

    const BigInt Pa = pyramidal(t.a), Pc = pyramidal(t.c);
    // r_low[j]^2 = (a+1)^2 + .. + (a+j)^2, r_up[j]^2 = c^2 + .. + (c-j)^2.
    std::vector<double> r_low(static_cast<std::size_t>(ell + 1));
    for (long j = 1; j <= ell; ++j)
        r_low[static_cast<std::size_t>(j)] =
            std::sqrt(BigInt(pyramidal(t.a + j) - Pa).convert_to<double>());
    std::vector<double> r_up(static_cast<std::size_t>(m));
    for (long j = 0; j < m; ++j)
        r_up[static_cast<std::size_t>(j)] =
            std::sqrt(BigInt(Pc - pyramidal(t.c - j - 1)).convert_to<double>());

    const Point2 far{r_low[static_cast<std::size_t>(ell)], 0.0};

    // Lower arm, built inward from the far vertex; every vertex strictly
    // below the axis, ties broken toward the axis.
    std::vector<Point2> lower = {far};
    for (long j = ell; j >= 2; --j) {
        const double r_in = r_low[static_cast<std::size_t>(j - 1)];
        Point2 c1 = tangent_step(lower.back(), r_in, true);
        Point2 c2 = tangent_step(lower.back(), r_in, false);
        Point2 pick;
        if (c1.y < 0 && c2.y < 0)
            pick = c1.y > c2.y ? c1 : c2;
        else if (c1.y < 0)
            pick = c1;
        else if (c2.y < 0)
            pick = c2;
        else
            throw std::logic_error("chainsaw: no lower-arm candidate below the axis");
        lower.push_back(pick);
    }

    // Upper arm, built inward from the far vertex, strictly above the axis;
    // the steps landing on circles 2 and 1 are steered into {|x| < y} when
    // c-a >= 15 (then c-b >= 4, so those steps exist).
    std::vector<Point2> upper = {far};
    for (long j = m - 1; j >= 1; --j)
        upper.push_back(choose_upper(upper.back(), r_up[static_cast<std::size_t>(j - 1)], j - 1,
                                     N >= 15));
    if (m > 1 && degenerate_polar_angle(upper.back())) {
        std::vector<Point2> retry = {far};
        if (!upper_exhaustive(retry, r_up, m - 2))
            throw std::logic_error("chainsaw: every upper arm ends degenerate at O");
        upper = retry;
    }

    PolygonPath path;
    path.vertices.reserve(static_cast<std::size_t>(N));
    path.vertices.push_back({0.0, 0.0});
    for (std::size_t i = lower.size(); i-- > 1;) path.vertices.push_back(lower[i]);
    path.vertices.push_back(far);
    for (std::size_t i = 1; i < upper.size(); ++i) path.vertices.push_back(upper[i]);
    for (BigInt s = t.a + 1; s <= t.c; ++s) path.side_targets.push_back(s);
    path.closure_residual = 0.0;
    return path;
}

PolygonReport validate(const PolygonPath& path, const SolutionTriple& t) {
    const std::size_t n = path.vertices.size();
    if (n < 3 || path.side_targets.size() != n)
        throw std::invalid_argument("validate: malformed path");
    if (BigInt(n) != t.c - t.a || path.side_targets.front() != t.a + 1 ||
        path.side_targets.back() != t.c)
        throw std::invalid_argument("validate: path does not carry sides a+1..c of the triple");
    const Point2 O = path.vertices[path.origin_index];

    PolygonReport rep;
    rep.closure_residual = path.closure_residual;

    for (std::size_t i = 0; i < n; ++i) {
        const Point2& v1 = path.vertices[i];
        const Point2& v2 = path.vertices[(i + 1) % n];
        const double len = norm(sub(v2, v1));
        const double target = path.side_targets[i].convert_to<double>();
        rep.max_side_residual = std::max(rep.max_side_residual, std::abs(len - target) / target);
        if (i != 0 && i != n - 1) {
            // Perpendicular-diagonal property: some endpoint V of the side
            // has (V - O) orthogonal to it. Sides touching O hold trivially.
            Point2 dir = scale(sub(v2, v1), 1.0 / len);
            const double r1 = std::abs(dot(sub(v1, O), dir)) / norm(sub(v1, O));
            const double r2 = std::abs(dot(sub(v2, O), dir)) / norm(sub(v2, O));
            rep.max_perp_residual = std::max(rep.max_perp_residual, std::min(r1, r2));
        }
    }

    std::vector<double> turns(n);
    for (std::size_t i = 0; i < n; ++i) {
        turns[i] = turn_angle(path.vertices[(i + n - 1) % n], path.vertices[i],
                              path.vertices[(i + 1) % n]);
        if (std::abs(turns[i]) < kDegenerateTol ||
            std::numbers::pi - std::abs(turns[i]) < kDegenerateTol)
            rep.degenerate_vertices.push_back(i);
    }

    double area2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        area2 += cross(path.vertices[i], path.vertices[(i + 1) % n]);
    const double sign = area2 >= 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n; ++i)
        if (sign * turns[i] < 0) ++rep.mu;

    for (std::size_t i = 0; i < n && !rep.self_intersecting; ++i) {
        const Point2& a1 = path.vertices[i];
        const Point2& a2 = path.vertices[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Point2& b1 = path.vertices[j];
            const Point2& b2 = path.vertices[(j + 1) % n];
            if (adjacent) {
                // Shared-endpoint pair: only an exact collinear fold-back
                // (the outer endpoints on the same side of the shared
                // vertex) makes the segments overlap.
                const Point2& shared = (j == i + 1) ? a2 : a1;
                const Point2& u = (j == i + 1) ? a1 : b1;
                const Point2& w = (j == i + 1) ? b2 : a2;
                if (orient_sign(u, shared, w) == 0 &&
                    dot(sub(u, shared), sub(w, shared)) > 0) {
                    rep.self_intersecting = true;
                    break;
                }
                continue;
            }
            if (segments_intersect(a1, a2, b1, b2)) {
                rep.self_intersecting = true;
                break;
            }
        }
    }

    rep.convex = rep.mu == 0 && !rep.self_intersecting;
    return rep;
}

double mu_lower_bound(long N) {
    if (N < 3) throw std::domain_error("mu_lower_bound: N must be >= 3");
    const double pi = std::numbers::pi;
    const double sn = std::sqrt(static_cast<double>(N));
    return sn / (pi * std::sqrt(3.0)) - 4.0 / (pi * std::sqrt(3.0 * N)) - 2.0;
}

long convexity_side_cap(long nu) {
    const double pi = std::numbers::pi;
    const double v = 8.0 + 3.0 * pi * pi * static_cast<double>((nu + 2) * (nu + 2));
    return static_cast<long>(std::floor(v));
}

std::vector<BigInt> exact_squared_diagonals(const SolutionTriple& t) {
    const long N = (t.c - t.a).convert_to<long>();
    const long ell = (t.b - t.a).convert_to<long>();
    const BigInt Pa = pyramidal(t.a), Pc = pyramidal(t.c);
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(N - 1));
    for (long v = 1; v < N; ++v)
        out.push_back(v <= ell ? BigInt(pyramidal(t.a + v) - Pa)
                               : BigInt(Pc - pyramidal(t.a + v)));
    return out;
}

double max_diagonal_residual(const PolygonPath& path, const SolutionTriple& t) {
    const std::vector<BigInt> exact = exact_squared_diagonals(t);
    double worst = 0.0;
    for (std::size_t v = 1; v < path.vertices.size(); ++v) {
        const Point2& p = path.vertices[v];
        const double d2 = p.x * p.x + p.y * p.y;
        const double e = exact[v - 1].convert_to<double>();
        worst = std::max(worst, std::abs(d2 - e) / e);
    }
    return worst;
}

std::vector<double> upper_arm_angular_steps(const PolygonPath& path, const SolutionTriple& t) {
    const long ell = (t.b - t.a).convert_to<long>();
    std::vector<double> steps;
    for (std::size_t i = static_cast<std::size_t>(ell); i + 1 < path.vertices.size(); ++i) {
        const Point2& u = path.vertices[i];
        const Point2& v = path.vertices[i + 1];
        steps.push_back(std::abs(std::atan2(cross(u, v), dot(u, v))));
    }
    return steps;
}

}  // namespace socs
