#include <doctest.h>

#include <numeric>

#include "hecke/atkin_lehner.hpp"
#include "hecke/oracles.hpp"

using namespace hecke;

namespace {

std::vector<std::int64_t> exact_divisors(std::int64_t N)
{
    std::vector<std::int64_t> out;
    for (std::int64_t l : divisors(N))
        if (std::gcd(l, N / l) == 1) out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("local coefficient")
{
    for (std::int64_t N = 1; N <= 50; ++N)
        for (std::int64_t D : {-3, -4, -7, -12, -16, -27, -36, 0, 5, 9})
            CHECK(c_N_of_D(1, D, N) == 1);
    for (std::int64_t N : {2, 6, 15, 30, 35})
        for (std::int64_t u : divisors(N))
            for (std::int64_t D : {0L, -u * u, -4 * u * u, -3 * u * u}) CHECK(c_N_of_D(u, D, N) == u);
    for (std::int64_t p : {2, 3, 5})
        for (int a = 1; a <= 4; ++a) {
            std::int64_t pa = 1;
            for (int i = 0; i < a; ++i) pa *= p;
            std::int64_t expect = 1;
            for (int i = 0; i < (a + 1) / 2; ++i) expect *= p;
            CHECK(c_N_of_D(pa, 0, pa) == expect);
        }
}

TEST_CASE("s_count against C with trivial character")
{
    CHECK(s_count(0, 1, 1) == 1);
    CHECK(s_count(0, 1, 5) == 2);
    for (std::int64_t N = 1; N <= 200; N += (N < 40 ? 1 : 7))
        for (std::int64_t n = 1; n <= 6; ++n)
            for (std::int64_t t = -5; t <= 5; ++t) {
                const std::int64_t S = s_count(t, n, N);
                CHECK(S == static_cast<std::int64_t>(s_N_scan(1, t, n, N).size()));
                for (std::int64_t u : divisors(N)) {
                    if ((t * t - 4 * n) % (u * u) != 0) continue;
                    if (mod_floor((t * t - 4 * n) / (u * u), 4) > 1) continue;
                    CHECK(C_N_chi(u, t, n, DirichletCharacter(N)) == CyclotomicNumber(S * c_N_of_D(u, t * t - 4 * n, N)));
                }
            }
}

TEST_CASE("cusp factor")
{
    for (std::int64_t N = 1; N <= 30; ++N)
        for (std::int64_t a = 1; a <= 8; ++a)
            for (std::int64_t d = 1; d <= 8; ++d)
                CHECK(CyclotomicNumber(phi_N_ell(a, d, N, 1)) == phi_N_chi(a, d, DirichletCharacter(N)));
    for (std::int64_t l : {2, 3, 5, 7, 11, 13})
        for (std::int64_t a = 1; a <= 12; ++a)
            for (std::int64_t d = 1; d <= 12; ++d) {
                const Rational v = phi_N_ell(a, d, l, l);
                if ((a + d) % l == 0) CHECK(v == make_rational(l - 1, l));
                else CHECK(v == 0);
            }
}

TEST_CASE("degenerates to the plain trace at l = 1")
{
    for (std::int64_t N = 1; N <= 20; ++N)
        for (int k : {2, 4, 6})
            for (std::int64_t n = 1; n <= 12; ++n)
                CHECK(trace_Tn_Wl(ALQuery(N, 1, k, n)).value == trace_S(TraceQuery(N, k, n)).value);
}

TEST_CASE("involution")
{
    CHECK(trace_Tn_Wl(ALQuery(11, 11, 2, 1)).value == CyclotomicNumber(-1));
    for (std::int64_t N = 1; N <= 50; ++N) {
        const std::int64_t g = genus_X0(N);
        for (std::int64_t l : exact_divisors(N)) {
            const Rational tr = trace_Tn_Wl(ALQuery(N, l, 2, 1)).value.rational_value();
            CHECK(abs(tr) <= g);
            const Rational fixed = (g + tr) / 2;
            CHECK(fixed.get_den() == 1);
            CHECK(fixed >= 0);
        }
    }
    // W_l W_m = W_lm on the same space, so the l-traces determine eigenspace dimensions;
    // for N = pq the four sign patterns must have nonnegative integral dimensions.
    for (std::int64_t N : {6, 10, 14, 15, 21, 22, 26, 33, 35, 39})
        for (int k : {2, 4, 6}) {
            std::int64_t p = factor(static_cast<std::uint64_t>(N))[0].prime, q = N / p;
            const Rational t1 = trace_S(TraceQuery(N, k, 1)).value.rational_value();
            const Rational tp = trace_Tn_Wl(ALQuery(N, p, k, 1)).value.rational_value();
            const Rational tq = trace_Tn_Wl(ALQuery(N, q, k, 1)).value.rational_value();
            const Rational tN = trace_Tn_Wl(ALQuery(N, N, k, 1)).value.rational_value();
            for (int e1 : {1, -1})
                for (int e2 : {1, -1}) {
                    const Rational dim = (t1 + e1 * tp + e2 * tq + e1 * e2 * tN) / 4;
                    CHECK(dim.get_den() == 1);
                    CHECK(dim >= 0);
                }
        }
}

TEST_CASE("query validation")
{
    CHECK_THROWS_AS(ALQuery(12, 2, 2, 1), precondition_error);
    CHECK_THROWS_AS(ALQuery(12, 5, 2, 1), precondition_error);
    CHECK_THROWS_AS(ALQuery(11, 11, 3, 1), precondition_error);
    CHECK_NOTHROW(ALQuery(12, 4, 2, 1));
}
