#include "socs/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace socs {

namespace {

// Square residues modulo 64, 63 and 65; a non-residue in any of them rules
// out a perfect square before paying for an integer square root.
struct SquareResidues {
    bool m64[64] = {}, m63[63] = {}, m65[65] = {};
    SquareResidues() {
        for (int i = 0; i < 64; ++i) m64[(i * i) % 64] = true;
        for (int i = 0; i < 63; ++i) m63[(i * i) % 63] = true;
        for (int i = 0; i < 65; ++i) m65[(i * i) % 65] = true;
    }
};

bool may_be_square(const BigInt& d) {
    static const SquareResidues r;
    if (!r.m64[static_cast<unsigned>(d & 63)]) return false;
    if (!r.m63[static_cast<unsigned>(d % 63)]) return false;
    if (!r.m65[static_cast<unsigned>(d % 65)]) return false;
    return true;
}

bool triple_less(const SolutionTriple& x, const SolutionTriple& y) {
    BigInt nx = x.c - x.a, ny = y.c - y.a;
    if (nx != ny) return nx < ny;
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

}  // namespace

std::vector<SolutionTriple> solve_split(const FixedLengthQuery& q) {
    const BigInt& N = q.N;
    const BigInt& ell = q.ell;
    if (!(0 < ell && ell < N)) throw std::domain_error("solve_split: need 0 < ell < N");

    std::vector<SolutionTriple> out;
    if (N == 2 * ell) {
        // Degenerate split: the leading coefficient 6(N - 2l) vanishes and
        // the remaining linear equation 12 l^2 b + 6 l^2 = 0 has b = -1/2.
        return out;
    }

    BigInt N2 = N * N, e2 = ell * ell;
    BigInt inner = -(N2 * N2) + 8 * N2 * N * ell - 12 * N2 * e2 + 8 * N * e2 * ell -
                   4 * e2 * e2 + N2 - 4 * N * ell + 4 * e2;
    BigInt delta = 3 * inner;
    if (delta < 0 || !may_be_square(delta)) return out;
    BigInt root = integer_sqrt(delta);
    if (root * root != delta) return out;

    // b = (-h +- root) / (6(N - 2l)) with h = half the linear coefficient.
    BigInt h = 3 * N2 + 6 * e2 - 6 * N * ell + 3 * N - 6 * ell;
    BigInt den = 6 * (N - 2 * ell);
    for (int sign = 0; sign < 2; ++sign) {
        BigInt num = sign == 0 ? BigInt(-h + root) : BigInt(-h - root);
        if (num % den != 0) continue;
        BigInt b = num / den;
        SolutionTriple t{b - ell, b, b + N - ell};
        if (is_socs_solution(t)) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), triple_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SolutionTriple> solve_fixed_length(const BigInt& N) {
    std::vector<SolutionTriple> out;
    if (N < 2) return out;
    for (BigInt ell = 1; ell < N; ++ell) {
        auto part = solve_split(FixedLengthQuery{N, ell});
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(),
              [](const SolutionTriple& x, const SolutionTriple& y) { return x.a < y.a; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SolutionTriple> enumerate_up_to(const BigInt& X, unsigned threads) {
    std::vector<SolutionTriple> out;
    if (X < 2) return out;
    if (X > 100000000) throw std::domain_error("enumerate_up_to: bound too large to sweep");

    const long xmax = X.convert_to<long>();
    if (threads <= 1 || xmax < 64) {
        for (long n = 2; n <= xmax; ++n) {
            auto part = solve_fixed_length(n);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;  // already sorted by (c-a, a): N ascending, a within N
    }

    std::vector<std::vector<SolutionTriple>> per_n(static_cast<std::size_t>(xmax + 1));
    std::atomic<long> next{2};
    auto worker = [&] {
        for (;;) {
            long n = next.fetch_add(1);
            if (n > xmax) return;
            per_n[static_cast<std::size_t>(n)] = solve_fixed_length(n);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (long n = 2; n <= xmax; ++n) {
        auto& part = per_n[static_cast<std::size_t>(n)];
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace socs
