#include "socs/core.hpp"

#include <stdexcept>

namespace socs {

BigInt integer_sqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("integer_sqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) throw std::domain_error("is_perfect_square: negative argument");
    BigInt r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

namespace detail {

BigInt pyramidal_poly(const BigInt& n) {
    // n(n+1) is even and one of n, n+1, 2n+1 is divisible by 3, so the
    // division is exact for every integer n.
    return n * (n + 1) * (2 * n + 1) / 6;
}

}  // namespace detail

BigInt pyramidal(const BigInt& n) {
    if (n < 0) throw std::domain_error("pyramidal: negative index");
    return detail::pyramidal_poly(n);
}

bool is_socs_solution(const BigInt& a, const BigInt& b, const BigInt& c) {
    if (!(0 < a + 1 && a + 1 < b && b < c)) return false;
    return detail::pyramidal_poly(a) + detail::pyramidal_poly(c) == 2 * detail::pyramidal_poly(b);
}

bool is_socs_solution(const SolutionTriple& t) { return is_socs_solution(t.a, t.b, t.c); }

SolutionTriple parameterized_solution(const BigInt& k) {
    if (k <= 0) throw std::domain_error("parameterized_solution: k must be >= 1");
    BigInt k2 = 2 * k * k;
    return SolutionTriple{k2 + k - 1, k2 + 2 * k, k2 + 3 * k};
}

std::optional<BigInt> classify_parameterized(const SolutionTriple& t) {
    BigInt k = t.c - t.b;
    if (k < 1) return std::nullopt;
    if (parameterized_solution(k) == t) return k;
    return std::nullopt;
}

GapPair gaps(const SolutionTriple& t) { return GapPair{t.b - t.a, t.c - t.b}; }

BigInt compute_A(const GapPair& g) {
    if (g.ell == g.m) throw std::domain_error("compute_A: ell == m (excluded by the balance bounds)");
    BigInt d = g.m - g.ell;
    return 3 * g.m * g.m * (12 * g.ell * g.ell * g.m * g.m - d * d * d * d);
}

BigInt compute_B(const GapPair& g) {
    if (g.ell == g.m) throw std::domain_error("compute_B: ell == m (excluded by the balance bounds)");
    return 4 * g.m * g.m * (g.m - g.ell) * (g.m * g.m * g.m - g.ell * g.ell * g.ell);
}

Rational balance_ratio(const SolutionTriple& t) {
    GapPair g = gaps(t);
    return Rational(g.ell, g.m);
}

bool balance_a_positive(const GapPair& g) {
    BigInt d = g.m - g.ell;
    return 12 * g.ell * g.ell * g.m * g.m > d * d * d * d;
}

bool balance_within_bounds(const GapPair& g) {
    if (g.ell <= 0 || g.m <= 0) return false;
    if (g.ell <= g.m) return false;  // lower bound: ell/m > 1, exact
    // Rational screen around the upper bound 1 + 2^(1/3) + 2^(2/3) = 3.84732...
    if (10000 * g.ell < 38473 * g.m) return true;
    if (10000 * g.ell > 38474 * g.m) return false;
    // Hairline band: the bound equals 1/(2^(1/3) - 1), so
    // ell/m < bound <=> 2*ell^3 < (ell + m)^3.
    BigInt s = g.ell + g.m;
    return 2 * g.ell * g.ell * g.ell < s * s * s;
}

}  // namespace socs
