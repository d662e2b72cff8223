#pragma once

#include <vector>

#include "socs/core.hpp"

namespace socs {

// Fixed-difference query: find solutions with c - a = N and b - a = ell.
struct FixedLengthQuery {
    BigInt N;    // target c - a, N >= 2
    BigInt ell;  // split parameter, 0 < ell < N
};

// All solutions with b - a = ell and c - b = N - ell (0, 1 or 2 of them),
// via the quadratic in b obtained by substituting a = b - ell, c = b + N - ell
// into the pyramidal identity. For N = 2*ell the quadratic degenerates to
// 12 l^2 b + 6 l^2 = 0, whose only root b = -1/2 is not a positive integer,
// so the result is empty. Throws std::domain_error if ell is out of range.
std::vector<SolutionTriple> solve_split(const FixedLengthQuery& q);

// Union of solve_split over ell in 1..N-1, sorted by a, deduplicated.
// At most 2(N-1) results. Returns empty for N < 2.
std::vector<SolutionTriple> solve_fixed_length(const BigInt& N);

// All solutions with c - a <= X, sorted by (c - a, a). threads = 0 or 1 runs
// single-threaded; larger values partition the sweep over N and merge in the
// fixed order, so the output is identical regardless of thread count.
std::vector<SolutionTriple> enumerate_up_to(const BigInt& X, unsigned threads = 1);

}  // namespace socs
