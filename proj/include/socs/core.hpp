#pragma once

#include <optional>

#include "socs/bigint.hpp"

namespace socs {

// A solution (a, b, c) to P_a + P_c = 2*P_b with 0 < a+1 < b < c.
// Plain aggregate; the invariants are checked by is_socs_solution, not by a
// constructor, because intermediate code (e.g. the Pell generator) handles
// candidate triples that may fail them.
struct SolutionTriple {
    BigInt a, b, c;

    friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
};

// Gap pair of a triple: ell = b - a, m = c - b.
struct GapPair {
    BigInt ell, m;
};

// n-th square pyramidal number n(n+1)(2n+1)/6, n >= 0.
// The product n(n+1)(2n+1) is always divisible by 6, so the division is exact.
BigInt pyramidal(const BigInt& n);

// true iff 0 < a+1 < b < c and P_a + P_c == 2*P_b exactly.
bool is_socs_solution(const BigInt& a, const BigInt& b, const BigInt& c);
bool is_socs_solution(const SolutionTriple& t);

// The parameterized family (2k^2+k-1, 2k^2+2k, 2k^2+3k), k >= 1.
SolutionTriple parameterized_solution(const BigInt& k);

// Recovers k (= c - b) if t equals parameterized_solution(k) for some k >= 1.
// All three components are re-checked, not just one.
std::optional<BigInt> classify_parameterized(const SolutionTriple& t);

GapPair gaps(const SolutionTriple& t);

// A = 3 m^2 (12 l^2 m^2 - (m - l)^4). Requires ell != m.
BigInt compute_A(const GapPair& g);

// B = 4 m^2 (m - l) (m^3 - l^3). Requires ell != m.
BigInt compute_B(const GapPair& g);

// ell/m as an exact rational.
Rational balance_ratio(const SolutionTriple& t);

// Exact integer test of 1 < ell/m < 1 + 2^(1/3) + 2^(2/3). The upper bound
// equals 1/(2^(1/3) - 1), so ell/m < bound iff 2*ell^3 < (ell+m)^3; a
// 38473/38474 over 10000 rational screen settles all but a hairline band.
bool balance_within_bounds(const GapPair& g);

// A-positivity form of the upper balance test: 12 l^2 m^2 > (m - l)^4.
// Necessary for any valid triple (it is exactly A > 0).
bool balance_a_positive(const GapPair& g);

namespace detail {
// Polynomial extension n(n+1)(2n+1)/6 valid for any integer n (still an
// exact division); pyramidal() adds the n >= 0 domain check.
BigInt pyramidal_poly(const BigInt& n);
}  // namespace detail

}  // namespace socs
