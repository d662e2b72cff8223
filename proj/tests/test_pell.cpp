#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "socs/pell.hpp"

using socs::BigInt;
using socs::ContinuedFractionExpansion;
using socs::PellUnit;
using socs::SolutionTriple;

namespace {

// The printed fundamental solution for D = 681522798996.
const char* kP66 =
    "656255818034383997445391312835392606452606438915940344809477"
    "432517816415686303848938358579958720601124769027506828449";
const char* kQ66 =
    "794937477236090382376510634959368770095239574754242412036"
    "127917605604471287041191179858533774984393335615406940";

std::vector<BigInt> period_of(const ContinuedFractionExpansion& cf) { return cf.period; }

}  // namespace

TEST_CASE("cf_sqrt basics") {
    auto cf2 = socs::cf_sqrt(2);
    CHECK(cf2.a0 == 1);
    CHECK(period_of(cf2) == std::vector<BigInt>{2});

    auto cf141 = socs::cf_sqrt(141);
    CHECK(cf141.a0 == 11);
    CHECK(period_of(cf141) == std::vector<BigInt>{1, 6, 1, 22});

    CHECK_THROWS_AS(socs::cf_sqrt(0), std::domain_error);
    CHECK_THROWS_AS(socs::cf_sqrt(-5), std::domain_error);
    CHECK_THROWS_AS(socs::cf_sqrt(49), std::domain_error);
}

TEST_CASE("cf_sqrt period always ends with 2*a0") {
    for (long d = 2; d <= 500; ++d) {
        BigInt r = socs::integer_sqrt(d);
        if (r * r == d) continue;
        auto cf = socs::cf_sqrt(d);
        CHECK(cf.period.back() == 2 * cf.a0);
    }
}

TEST_CASE("convergents of the expansion track the PQa denominators") {
    // p_{i-1}^2 - D q_{i-1}^2 = (-1)^i d_i, with d_i from an independent PQa
    // rerun; at the period end the value is +1 (even period) or -1 (odd).
    for (long d : {2, 3, 13, 61, 141, 5172}) {
        auto cf = socs::cf_sqrt(d);
        BigInt pm1 = 1, p0 = cf.a0, qm1 = 0, q0 = 1;
        BigInt m = 0, den = 1, a = cf.a0;
        for (std::size_t i = 0; i < cf.period.size(); ++i) {
            m = den * a - m;
            den = (d - m * m) / den;
            a = (cf.a0 + m) / den;
            CHECK(a == cf.period[i]);
            BigInt norm = p0 * p0 - d * q0 * q0;
            CHECK(norm == ((i % 2 == 0) ? -den : den));
            BigInt pn = cf.period[i] * p0 + pm1;
            BigInt qn = cf.period[i] * q0 + qm1;
            pm1 = p0; p0 = pn;
            qm1 = q0; q0 = qn;
        }
        BigInt endnorm = pm1 * pm1 - d * qm1 * qm1;
        CHECK(endnorm == (cf.period.size() % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("fundamental_unit basics") {
    auto u141 = socs::fundamental_unit(141);
    CHECK(u141.p == 95);
    CHECK(u141.q == 8);
    auto u2 = socs::fundamental_unit(2);
    CHECK(u2.p == 3);
    CHECK(u2.q == 2);
    // odd period: sqrt(13) = [3; 1,1,1,1,6], the +1 solution needs doubling
    auto cf13 = socs::cf_sqrt(13);
    CHECK(cf13.period.size() == 5);
    auto u13 = socs::fundamental_unit(13);
    CHECK(u13.p == 649);
    CHECK(u13.q == 180);
}

TEST_CASE("closed-form expansion and unit for the parameterized family, k = 1..20") {
    for (long k = 1; k <= 20; ++k) {
        BigInt kk = k;
        BigInt A = kk * kk * (36 * kk * kk * kk * kk + 72 * kk * kk * kk + 36 * kk * kk - 3);
        auto cf = socs::cf_sqrt(A);
        CHECK(cf.a0 == 6 * kk * kk * kk + 6 * kk * kk - 1);
        CHECK(cf.period == std::vector<BigInt>{1, 4 * kk + 2, 1,
                                               12 * kk * kk * kk + 12 * kk * kk - 2});
        auto u = socs::fundamental_unit(A);
        CHECK(u.p == 24 * kk * kk * kk * kk + 48 * kk * kk * kk + 24 * kk * kk - 1);
        CHECK(u.q == 4 * kk + 4);
    }
}

TEST_CASE("period 212 and the printed unit for D = 681522798996") {
    BigInt D("681522798996");
    auto cf = socs::cf_sqrt(D);
    CHECK(cf.period.size() == 212);
    auto u = socs::fundamental_unit(D);
    CHECK(u.p == BigInt(kP66));
    CHECK(u.q == BigInt(kQ66));
}

TEST_CASE("unit_power") {
    PellUnit u = socs::fundamental_unit(141);
    CHECK(socs::unit_power(u, 0) == std::pair<BigInt, BigInt>{1, 0});
    CHECK(socs::unit_power(u, 1) == std::pair<BigInt, BigInt>{95, 8});
    CHECK(socs::unit_power(u, 2) == std::pair<BigInt, BigInt>{18049, 1520});
    CHECK(socs::unit_power(u, -1) == std::pair<BigInt, BigInt>{95, -8});
    for (long n = -5; n <= 5; ++n) {
        auto [p, q] = socs::unit_power(u, n);
        CHECK(p * p - 141 * q * q == 1);
        CHECK(p % 2 != 0);
    }
}

TEST_CASE("pell_context") {
    auto ctx = socs::pell_context(SolutionTriple{2, 4, 5});
    CHECK(ctx.A == 141);
    CHECK(ctx.B == 28);
    CHECK(ctx.u0 == 107);
    CHECK(ctx.v0 == 9);
    CHECK(ctx.unit.p == 95);
    CHECK(ctx.unit.q == 8);
    CHECK(ctx.u0 * ctx.u0 - ctx.A * ctx.v0 * ctx.v0 == ctx.B);

    CHECK(socs::pell_context(SolutionTriple{66, 159, 198}).A == BigInt("681522798996"));

    // k = 2: the closed-form A equals compute_A of the gaps (3, 2).
    auto ctx2 = socs::pell_context(SolutionTriple{9, 12, 14});
    CHECK(ctx2.A == 5172);
    CHECK(ctx2.A == socs::compute_A(socs::gaps(SolutionTriple{9, 12, 14})));

    CHECK_THROWS_AS(socs::pell_context(SolutionTriple{1, 2, 3}), std::domain_error);
}

TEST_CASE("generate from (2,4,5)") {
    auto orbit = socs::generate(SolutionTriple{2, 4, 5}, 0, 5);
    REQUIRE(orbit.size() == 6);
    CHECK(orbit[0].triple == SolutionTriple{2, 4, 5});
    CHECK(orbit[1].triple == SolutionTriple{473, 855, 1046});
    CHECK(orbit[2].triple == SolutionTriple{89962, 162540, 198829});
    CHECK(orbit[3].triple == SolutionTriple{17092401, 30881839, 37776558});
    CHECK(orbit[4].triple == SolutionTriple{BigInt("3247466322"), BigInt("5867386964"),
                                            BigInt("7177347285")});
    CHECK(orbit[5].triple == SolutionTriple{BigInt("617001508873"), BigInt("1114772641415"),
                                            BigInt("1363658207686")});
    for (const auto& e : orbit) {
        CHECK(e.valid);
        CHECK(socs::is_socs_solution(e.triple));
        // plane x - 3y + 2z = 0, odd parity
        CHECK(e.triple.a - 3 * e.triple.b + 2 * e.triple.c == 0);
        CHECK((e.triple.c - e.triple.a) % 2 != 0);
    }
}

TEST_CASE("generate flags out-of-order entries instead of dropping them") {
    auto orbit = socs::generate(SolutionTriple{2, 4, 5}, -1, -1);
    REQUIRE(orbit.size() == 1);
    CHECK(orbit[0].triple == SolutionTriple{1, -1, -2});
    CHECK_FALSE(orbit[0].valid);
    CHECK_THROWS_AS(socs::generate(SolutionTriple{2, 4, 5}, 2, 1), std::domain_error);
}

TEST_CASE("generate from (66,159,198): printed coefficient identities") {
    auto orbit = socs::generate(SolutionTriple{66, 159, 198}, 1, 2);
    for (const auto& e : orbit) {
        CHECK(e.valid);
        CHECK((e.triple.c - e.triple.a) % 2 == 0);
        CHECK(e.triple.c - e.triple.b == 39 * e.p_n + BigInt("32196528") * e.q_n);
        CHECK(2 * e.triple.a == -1 + 133 * e.p_n + 2 * BigInt("54898155") * e.q_n);
    }
}

TEST_CASE("parameterized bases: explicit gap growth identities, k = 1..10, n = 1..4") {
    for (long k = 1; k <= 10; ++k) {
        BigInt kk = k;
        auto base = socs::parameterized_solution(kk);
        for (const auto& e : socs::generate(base, 1, 4)) {
            CHECK(e.valid);
            CHECK(e.triple.c - e.triple.b == kk * (e.p_n + 6 * kk * kk * (kk + 1) * e.q_n));
            CHECK(e.triple.b - (e.triple.a + 1) ==
                  (kk + 1) * e.p_n + 6 * kk * kk * (kk + 1) * (kk + 1) * e.q_n - 1);
        }
    }
}

TEST_CASE("solution_plane") {
    auto p = socs::solution_plane(SolutionTriple{2, 4, 5});
    CHECK(p == std::array<BigInt, 3>{1, -3, 2});
    // (1,1,1) lies on every such plane: the coefficients sum to zero.
    CHECK(p[0] + p[1] + p[2] == 0);
    for (long k = 1; k <= 20; ++k) {
        BigInt kk = k;
        auto pk = socs::solution_plane(socs::parameterized_solution(kk));
        CHECK(pk == std::array<BigInt, 3>{kk, -(1 + 2 * kk), 1 + kk});
        CHECK(pk[0] + pk[1] + pk[2] == 0);
    }
    // gcd normalization: (66,159,198) has raw coefficients (-39, 132, -93),
    // gcd 3.
    auto p66 = socs::solution_plane(SolutionTriple{66, 159, 198});
    CHECK(p66 == std::array<BigInt, 3>{13, -44, 31});
}
