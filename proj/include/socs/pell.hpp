#pragma once

#include <array>
#include <utility>
#include <vector>

#include "socs/core.hpp"

namespace socs {

// Periodic continued fraction of sqrt(D): a0 = floor(sqrt(D)) plus the
// repeating block of partial quotients. For square-free-of-square D the last
// period element is always 2*a0.
struct ContinuedFractionExpansion {
    BigInt a0;
    std::vector<BigInt> period;
};

// Fundamental solution of p^2 - D q^2 = 1, p, q >= 1.
struct PellUnit {
    BigInt p, q, D;
};

// Per-triple Pell data for the solution generator: u0^2 - A v0^2 = B with
// v0 = 2b + 1, and the fundamental unit of p^2 - A q^2 = 1.
struct PellContext {
    SolutionTriple base;
    BigInt A, B, u0, v0;
    PellUnit unit;
};

// One generated orbit entry. The triple always satisfies the pyramidal
// identity, lies on the base solution's plane, and preserves the parity of
// c - a; `valid` records whether the ordering 0 < a+1 < b < c also holds
// (it can fail for n <= 0).
struct GeneratedEntry {
    long n;
    SolutionTriple triple;
    bool valid;
    BigInt p_n, q_n;
};

// PQa expansion of sqrt(D): m0=0, d0=1, a0=floor(sqrt(D));
//   m_{i+1} = d_i a_i - m_i, d_{i+1} = (D - m_{i+1}^2)/d_i,
//   a_{i+1} = floor((a0 + m_{i+1})/d_{i+1}),
// run until the (m, d) state pair repeats its first value.
// Throws std::domain_error if D <= 0 or D is a perfect square.
ContinuedFractionExpansion cf_sqrt(const BigInt& D);

// Minimal (p, q) with p^2 - D q^2 = 1, q >= 1, read off the convergent at the
// end of the period (doubled when the period length is odd).
PellUnit fundamental_unit(const BigInt& D);

// (p_n, q_n) with p_n + q_n sqrt(D) = (p + q sqrt(D))^n, any n in Z
// (the inverse unit is (p, -q)). (p_0, q_0) = (1, 0).
std::pair<BigInt, BigInt> unit_power(const PellUnit& u, long n);

// Computes A, B, u0, v0 and the fundamental unit for a valid base triple,
// asserting u0^2 - A v0^2 = B and that the unit's p is odd.
PellContext pell_context(const SolutionTriple& base);

// Orbit of the base solution under the fundamental unit, n in [n_from, n_to].
// Evaluates the closed-form expressions for (a_n, b_n, c_n); the half-integer
// sums are provably integral, and a std::logic_error is thrown if the
// divisibility-by-2 assertion ever fails (that would be an implementation
// bug, not bad input).
std::vector<GeneratedEntry> generate(const SolutionTriple& base, long n_from, long n_to);

// Coefficients (x, y, z) of the plane (b-c)x + (c-a)y + (a-b)z = 0 through
// the triple and (1,1,1), divided by their gcd, sign fixed so the middle
// coefficient is negative.
std::array<BigInt, 3> solution_plane(const SolutionTriple& t);

}  // namespace socs
