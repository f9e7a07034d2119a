#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "hecke/characters.hpp"
#include "hecke/cyclotomic.hpp"

using namespace hecke;

namespace {

std::complex<double> cx(const CyclotomicNumber& x) { return x.to_complex(); }

bool near(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

std::int64_t multiplicative_order(std::int64_t a, std::int64_t N)
{
    std::int64_t x = a % N, k = 1;
    while (x != 1 % N) x = x * a % N, ++k;
    return k;
}

} // namespace

TEST_CASE("cyclotomic arithmetic")
{
    const auto i = CyclotomicNumber::root_of_unity(4, 1);
    CHECK(i * i == CyclotomicNumber(-1));
    const auto w = CyclotomicNumber::root_of_unity(3, 1);
    CHECK((CyclotomicNumber(1) + w + w * w).is_zero());
    const auto m1 = CyclotomicNumber::root_of_unity(2, 1);
    CHECK(m1 == CyclotomicNumber(-1));
    CHECK(m1.embed(12).simplified() == CyclotomicNumber(-1));
    CHECK(m1.embed(12).rational_value() == -1);
    CHECK(normalize_field(6) == 3);
    CHECK(normalize_field(12) == 12);

    // Oracle: complex floating point. Sums of roots of unity of mixed orders.
    for (std::int64_t m : {3, 4, 5, 7, 8, 9, 12, 15, 16, 20}) {
        CyclotomicNumber acc(0);
        std::complex<double> ref = 0;
        for (std::int64_t j = 0; j < 2 * m; j += 3) {
            const auto z = CyclotomicNumber::root_of_unity(m, j) * Rational(j + 1, 2);
            acc += z;
            ref += std::polar(1.0, 2 * M_PI * static_cast<double>(j) / static_cast<double>(m)) * ((j + 1) / 2.0);
        }
        CHECK(near(cx(acc), ref));
        const auto sq = acc * acc - acc;
        CHECK(near(cx(sq), ref * ref - ref));
    }
    // Sum of all m-th roots vanishes; of primitive ones it is mu(m).
    for (std::int64_t m = 1; m <= 30; ++m) {
        CyclotomicNumber all(0), prim(0);
        for (std::int64_t j = 0; j < m; ++j) {
            const auto z = CyclotomicNumber::root_of_unity(m, j);
            all += z;
            if (std::gcd(j, m) == 1) prim += z;
        }
        CHECK(all == CyclotomicNumber(m == 1 ? 1 : 0));
        CHECK(prim == CyclotomicNumber(mobius(m)));
    }
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    for (std::int64_t m = 1; m <= 60; ++m) CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(m).size()) == euler_phi(m) + 1);
}

TEST_CASE("unit group generators")
{
    CHECK(UnitGroup(1).factors().empty());
    const UnitGroup g8(8);
    REQUIRE(g8.factors().size() == 2);
    CHECK(g8.factors()[0].generator == 7);
    CHECK(g8.factors()[0].order == 2);
    CHECK(g8.factors()[1].generator == 5);
    CHECK(g8.factors()[1].order == 2);
    const UnitGroup g7(7);
    REQUIRE(g7.factors().size() == 1);
    CHECK(g7.factors()[0].generator == 3);
    CHECK(g7.factors()[0].order == 6);

    for (std::int64_t N = 1; N <= 200; ++N) {
        const UnitGroup g(N);
        std::int64_t prod = 1;
        for (const auto& f : g.factors()) {
            CHECK(multiplicative_order(f.generator, N) == f.order);
            prod *= f.order;
        }
        CHECK(prod == euler_phi(N));
        CHECK(g.order() == euler_phi(N));
        // The discrete log reproduces each unit.
        for (std::int64_t a = 0; a < N; ++a) {
            const auto lg = g.log(a);
            CHECK(lg.has_value() == (std::gcd(a, N) == 1));
            if (!lg) continue;
            std::int64_t x = 1 % N;
            for (std::size_t i = 0; i < g.factors().size(); ++i) x = x * pow_mod(g.factors()[i].generator, static_cast<std::uint64_t>((*lg)[i]), N) % N;
            CHECK(x == a % N);
        }
    }
}

TEST_CASE("enumeration")
{
    CHECK(enumerate_characters(1).size() == 1);
    const auto c4 = enumerate_characters(4);
    REQUIRE(c4.size() == 2);
    CHECK(c4[0].is_trivial());
    CHECK(c4[1].eval(3) == CyclotomicNumber(-1));
    CHECK(c4[1].parity() == -1);
    std::vector<std::int64_t> orders;
    for (const auto& chi : enumerate_characters(5)) orders.push_back(chi.order());
    CHECK(orders == std::vector<std::int64_t>{1, 4, 2, 4});

    for (std::int64_t N = 1; N <= 60; ++N) {
        const auto all = enumerate_characters(N);
        CHECK(static_cast<std::int64_t>(all.size()) == euler_phi(N));
        std::size_t odd = 0;
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].index() == static_cast<std::int64_t>(i));
            CHECK(character_by_index(N, static_cast<std::int64_t>(i)) == all[i]);
            odd += all[i].parity() == -1;
        }
        CHECK(enumerate_characters(N, -1).size() == odd);
        CHECK(enumerate_characters(N, 1).size() == all.size() - odd);
    }
    CHECK_THROWS_AS(character_by_index(5, 4), precondition_error);
}

TEST_CASE("character values")
{
    for (std::int64_t N = 1; N <= 40; ++N)
        for (const auto& chi : enumerate_characters(N)) {
            CHECK(chi.eval(1) == CyclotomicNumber(1));
            CHECK(chi.eval(-1) == CyclotomicNumber(chi.parity()));
            // Oracle: multiplicativity, periodicity, vanishing off units, and orthogonality.
            CyclotomicNumber total(0);
            for (std::int64_t a = 0; a < N; ++a) {
                if (std::gcd(a, N) != 1) {
                    CHECK(chi.eval(a).is_zero());
                    continue;
                }
                total += chi.eval(a);
                CHECK(chi.eval(a + 3 * N) == chi.eval(a));
                for (std::int64_t b = 1; b < N; b += 3) CHECK(chi.eval(a * b) == chi.eval(a) * chi.eval(b));
            }
            CHECK(total == CyclotomicNumber(chi.is_trivial() ? euler_phi(N) : 0));
        }
    CHECK(enumerate_characters(4)[1].eval(2).is_zero());
}

TEST_CASE("conductor")
{
    CHECK(DirichletCharacter(9).conductor() == 1);
    CHECK(enumerate_characters(4)[1].conductor() == 4);
    // chi_4 induced to modulus 8 is the character 7 -> -1, 5 -> 1.
    const auto c8 = enumerate_characters(8);
    CHECK(c8[1].eval(3) == CyclotomicNumber(-1));
    CHECK(c8[1].eval(5) == CyclotomicNumber(1));
    CHECK(c8[1].conductor() == 4);
    for (std::int64_t N = 1; N <= 120; ++N)
        for (const auto& chi : enumerate_characters(N)) CHECK(chi.conductor() == conductor_brute_force(chi));
}

TEST_CASE("evaluation modulo a divisor")
{
    for (std::int64_t N = 1; N <= 36; ++N)
        for (const auto& chi : enumerate_characters(N)) {
            if (chi.is_trivial()) {
                for (std::int64_t M : divisors(N))
                    for (std::int64_t a = 0; a < M; ++a)
                        if (std::gcd(a, M) == 1) CHECK(chi.eval_mod_divisor(a, M) == CyclotomicNumber(1));
                continue;
            }
            // Oracle: for c | M | N, the value at a mod M is chi(x) for any unit x mod N with x = a mod M.
            for (std::int64_t M : divisors(N)) {
                if (M % chi.conductor() != 0) continue;
                for (std::int64_t a = 0; a < M; ++a) {
                    const auto v = chi.eval_mod_divisor(a, M);
                    if (std::gcd(a, M) != 1) {
                        CHECK(v.is_zero());
                        continue;
                    }
                    for (std::int64_t x = a; x < N + M; x += M)
                        if (std::gcd(x, N) == 1) CHECK(chi.eval(x) == v);
                }
            }
        }
    const auto c4 = enumerate_characters(4)[1];
    CHECK(c4.eval_mod_divisor(3, 4) == CyclotomicNumber(-1));
    // Conductor 3 character mod 12 read mod 6 at 5 is its primitive value at 2.
    for (const auto& chi : enumerate_characters(12))
        if (chi.conductor() == 3) CHECK(chi.eval_mod_divisor(5, 6) == CyclotomicNumber(-1));
}

TEST_CASE("components at exact divisors")
{
    for (std::int64_t N = 2; N <= 60; ++N)
        for (const auto& chi : enumerate_characters(N))
            for (std::int64_t M : divisors(N)) {
                if (std::gcd(M, N / M) != 1) continue;
                const auto a = chi.component(M), b = chi.component(N / M);
                for (std::int64_t x = 1; x < N; ++x)
                    if (std::gcd(x, N) == 1) CHECK(a.eval(x) * b.eval(x) == chi.eval(x));
            }
}
