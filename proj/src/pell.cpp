#include "socs/pell.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace socs {

namespace {

using boost::multiprecision::gcd;

// (p1, q1) * (p2, q2) in Z[sqrt(D)].
std::pair<BigInt, BigInt> unit_mul(const std::pair<BigInt, BigInt>& u,
                                   const std::pair<BigInt, BigInt>& v, const BigInt& D) {
    return {u.first * v.first + D * u.second * v.second,
            u.first * v.second + u.second * v.first};
}

}  // namespace

ContinuedFractionExpansion cf_sqrt(const BigInt& D) {
    if (D <= 0) throw std::domain_error("cf_sqrt: D must be positive");
    BigInt a0 = integer_sqrt(D);
    if (a0 * a0 == D) throw std::domain_error("cf_sqrt: D is a perfect square");

    ContinuedFractionExpansion cf;
    cf.a0 = a0;
    BigInt m = 0, d = 1, a = a0;
    // Advance to state 1 and remember it; the expansion repeats exactly when
    // (m, d) next equals this pair.
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    const BigInt m1 = m, d1 = d;
    cf.period.push_back(a);
    for (;;) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        if (m == m1 && d == d1) break;
        cf.period.push_back(a);
    }
    return cf;
}

PellUnit fundamental_unit(const BigInt& D) {
    ContinuedFractionExpansion cf = cf_sqrt(D);
    const std::size_t r = cf.period.size();
    // Convergent p_{k}/q_{k} after consuming k partial quotients past a0;
    // the +1 solution sits at the end of the period, or of the doubled
    // period when r is odd (the single period then gives the -1 solution).
    const std::size_t steps = (r % 2 == 0) ? r - 1 : 2 * r - 1;
    BigInt pm1 = 1, p0 = cf.a0, qm1 = 0, q0 = 1;
    for (std::size_t i = 0; i < steps; ++i) {
        const BigInt& ai = cf.period[i % r];
        BigInt pn = ai * p0 + pm1;
        BigInt qn = ai * q0 + qm1;
        pm1 = p0; p0 = pn;
        qm1 = q0; q0 = qn;
    }
    PellUnit u{p0, q0, D};
    if (u.p * u.p - D * u.q * u.q != 1)
        throw std::logic_error("fundamental_unit: convergent does not solve p^2 - Dq^2 = 1");
    return u;
}

std::pair<BigInt, BigInt> unit_power(const PellUnit& u, long n) {
    std::pair<BigInt, BigInt> base{u.p, u.q};
    if (n < 0) base.second = -base.second;  // inverse of a norm-1 unit
    unsigned long e = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1ul
                            : static_cast<unsigned long>(n);
    std::pair<BigInt, BigInt> acc{1, 0};
    while (e > 0) {
        if (e & 1ul) acc = unit_mul(acc, base, u.D);
        e >>= 1;
        if (e > 0) base = unit_mul(base, base, u.D);
    }
    return acc;
}

PellContext pell_context(const SolutionTriple& base) {
    if (!is_socs_solution(base)) throw std::domain_error("pell_context: base is not a solution");
    const BigInt &a = base.a, &b = base.b, &c = base.c;
    GapPair g = gaps(base);
    PellContext ctx;
    ctx.base = base;
    ctx.A = compute_A(g);
    ctx.B = compute_B(g);
    ctx.u0 = (c - b) * (4 * a * a * a + 3 * a * a - 6 * a * a * b - 6 * a * b + 4 * b * b * b +
                        6 * b * b - 6 * b * c * c - 6 * b * c + 4 * c * c * c + 3 * c * c);
    ctx.v0 = 2 * b + 1;
    if (ctx.u0 * ctx.u0 - ctx.A * ctx.v0 * ctx.v0 != ctx.B)
        throw std::logic_error("pell_context: u0^2 - A v0^2 != B");
    ctx.unit = fundamental_unit(ctx.A);
    if (ctx.unit.p % 2 == 0)
        throw std::logic_error("pell_context: fundamental p is even");
    return ctx;
}

std::vector<GeneratedEntry> generate(const SolutionTriple& base, long n_from, long n_to) {
    if (n_from > n_to) throw std::domain_error("generate: n_from > n_to");
    PellContext ctx = pell_context(base);
    const BigInt &a = base.a, &b = base.b, &c = base.c;

    // q_n coefficients of the closed forms for a_n, b_n, c_n (each carries a
    // common factor (b - c)).
    const BigInt Ka = 2 * a * a * a + 3 * a * a - 12 * a * b * b - 12 * a * b + 6 * a * c * c +
                      6 * a * c + 8 * b * b * b + 6 * b * b - 4 * c * c * c - 3 * c * c;
    const BigInt Kb = -4 * a * a * a + 6 * a * a * b - 3 * a * a + 6 * a * b - 4 * b * b * b -
                      6 * b * b + 6 * b * c * c + 6 * b * c - 4 * c * c * c - 3 * c * c;
    const BigInt Kc = -4 * a * a * a + 6 * a * a * c - 3 * a * a + 6 * a * c + 8 * b * b * b -
                      12 * b * b * c + 6 * b * b - 12 * b * c + 2 * c * c * c + 3 * c * c;
    const BigInt bc = b - c;

    // Cross-check coefficients: u_n recovered from (b_n, c_n) must match the
    // Pell-side recurrence u_n = u0 p_n + A v0 q_n.
    const BigInt l = b - a, m = c - b;
    const BigInt cu_c = 4 * (m * m * m - l * l * l);
    const BigInt cu_b = 4 * l * l * l + 6 * l * l * m + 2 * m * m * m;
    const BigInt cu_0 = 3 * l * l * m + 3 * m * m * m;

    std::vector<GeneratedEntry> out;
    out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
    for (long n = n_from; n <= n_to; ++n) {
        auto [pn, qn] = unit_power(ctx.unit, n);
        BigInt sa = (1 + 2 * a) * pn + bc * Ka * qn - 1;
        BigInt sb = (1 + 2 * b) * pn + bc * Kb * qn - 1;
        BigInt sc = (1 + 2 * c) * pn + bc * Kc * qn - 1;
        if (sa % 2 != 0 || sb % 2 != 0 || sc % 2 != 0)
            throw std::logic_error("generate: closed form produced a non-integral component");
        GeneratedEntry e;
        e.n = n;
        e.triple = SolutionTriple{sa / 2, sb / 2, sc / 2};
        e.p_n = pn;
        e.q_n = qn;
        const BigInt &an = e.triple.a, &bn = e.triple.b, &cn = e.triple.c;

        // Structural invariants that hold for every n, valid or not.
        if (detail::pyramidal_poly(an) + detail::pyramidal_poly(cn) !=
            2 * detail::pyramidal_poly(bn))
            throw std::logic_error("generate: pyramidal identity violated");
        if ((b - c) * an + (c - a) * bn + (a - b) * cn != 0)
            throw std::logic_error("generate: entry left the base plane");
        if (((cn - an) - (c - a)) % 2 != 0)
            throw std::logic_error("generate: parity of c_n - a_n changed");
        BigInt un = ctx.u0 * pn + ctx.A * ctx.v0 * qn;
        BigInt vn = ctx.u0 * qn + ctx.v0 * pn;
        if (vn != 2 * bn + 1 || un != cu_c * cn + cu_b * bn + cu_0)
            throw std::logic_error("generate: (u_n, v_n) linear relations violated");

        e.valid = is_socs_solution(e.triple);
        out.push_back(std::move(e));
    }
    return out;
}

std::array<BigInt, 3> solution_plane(const SolutionTriple& t) {
    std::array<BigInt, 3> p{t.b - t.c, t.c - t.a, t.a - t.b};
    BigInt g = gcd(gcd(abs(p[0]), abs(p[1])), abs(p[2]));
    if (g > 1)
        for (auto& x : p) x /= g;
    if (p[1] > 0)
        for (auto& x : p) x = -x;
    return p;
}

}  // namespace socs
