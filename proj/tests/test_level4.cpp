#include <doctest.h>

#include "hecke/class_numbers.hpp"
#include "hecke/gamma0_trace.hpp"
#include "hecke/gamma1_trace.hpp"
#include "hecke/level4.hpp"
#include "hecke/oracles.hpp"

using namespace hecke;

namespace {

CyclotomicNumber engine(int k, std::int64_t n)
{
    const auto chi = enumerate_characters(4)[k % 2 == 0 ? 0 : 1];
    return trace_S(TraceQuery(4, k, chi, n)).value;
}

CyclotomicNumber cz(const BigInt& z) { return CyclotomicNumber(Rational(z)); }

} // namespace

TEST_CASE("odd n, even weight")
{
    for (std::int64_t n = 1; n <= 99; n += 2) CHECK(trace4_even_weight_odd_n(2, n) == 0);
    for (int k : {4, 6, 8})
        for (std::int64_t n = 1; n <= 99; n += 2) {
            CHECK(cz(trace4_even_weight_odd_n(k, n)) == engine(k, n));
            CHECK(trace4_even_weight_odd_n(k, n) == trace_gamma1_S(Gamma1Query(4, k, n)).value);
        }
    CHECK_THROWS_AS(trace4_even_weight_odd_n(4, 2), precondition_error);
    CHECK_THROWS_AS(trace4_even_weight_odd_n(5, 1), precondition_error);
}

TEST_CASE("odd n, odd weight")
{
    for (std::int64_t n = 1; n <= 99; n += 2) CHECK(trace4_odd_weight_odd_n(3, n) == 0);
    for (int k : {5, 7})
        for (std::int64_t n = 1; n <= 99; n += 2) {
            CHECK(cz(trace4_odd_weight_odd_n(k, n)) == engine(k, n));
            if (n % 4 == 3) CHECK(trace4_odd_weight_odd_n(k, n) == 0);
        }
}

TEST_CASE("even n")
{
    for (std::int64_t n = 2; n <= 100; n += 2) CHECK(trace4_even_n(2, n) == 0);
    for (int k = 3; k <= 8; ++k)
        for (std::int64_t n = 2; n <= 100; n += 2) CHECK(cz(trace4_even_n(k, n)) == engine(k, n));
}

TEST_CASE("trace forms")
{
    const auto delta = delta_qexp(10);
    const auto f = trace_form(GroupSpec{}, 12, 10);
    CHECK(f[0].is_zero());
    for (std::int64_t n = 1; n <= 10; ++n) CHECK(f[n] == CyclotomicNumber(Rational(delta[n])));

    GroupSpec g4;
    g4.level = 4;
    const auto z = trace_form(g4, 2, 50);
    for (std::int64_t n = 0; n <= 50; ++n) CHECK(z[n].is_zero());

    const auto odd = trace_form(g4, 6, 30, ParityFilter::odd);
    const auto even = trace_form(g4, 6, 30, ParityFilter::even);
    const auto all = trace_form(g4, 6, 30);
    for (std::int64_t n = 1; n <= 30; ++n) {
        CHECK((n % 2 == 1 ? even[n] : odd[n]).is_zero());
        CHECK(odd[n] + even[n] == all[n]);
        if (n % 2 == 1) CHECK(odd[n] == cz(trace4_even_weight_odd_n(6, n)));
    }
    // S_6(Gamma_0(4)) is one-dimensional, spanned by eta(2z)^12; the trace form is that eigenform.
    CHECK(all[1] == CyclotomicNumber(1));
    CHECK(all[2].is_zero());
    CHECK(all[3] == CyclotomicNumber(-12));
    CHECK(all[5] == CyclotomicNumber(54));

    GroupSpec g1;
    g1.kind = GroupSpec::Kind::gamma1;
    g1.level = 7;
    const auto h = trace_form(g1, 4, 6);
    CHECK(h[2] == CyclotomicNumber(-3));
}

TEST_CASE("class number relations")
{
    CHECK(hurwitz_H(12) == 4 * hurwitz_H(3));
    CHECK(hurwitz_H(28) == 2 * hurwitz_H(7));
    CHECK(hurwitz_H(28) == 2);
    CHECK(hurwitz_H(16) == 3 * hurwitz_H(4) - 2 * hurwitz_H(1));
    const auto r = relation_table_check(2000);
    CHECK(r.ok());
    CHECK(r.checked > 0);
}
