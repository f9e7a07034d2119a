#include <doctest.h>

#include <numeric>

#include "hecke/class_numbers.hpp"

using namespace hecke;

namespace {

// Oracle: all reduced forms by a bounded triple loop; weight 1/3, 1/2 for the two special classes.
Rational brute_H(std::int64_t D)
{
    Rational total = 0;
    for (std::int64_t a = 1; 3 * a * a <= D; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if ((b * b + D) % (4 * a) != 0) continue;
            const std::int64_t c = (b * b + D) / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (a == b && a == c) total += Rational(1, 3);
            else if (b == 0 && a == c) total += Rational(1, 2);
            else total += 1;
        }
    return total;
}

std::int64_t brute_h(std::int64_t disc)
{
    std::int64_t count = 0;
    const std::int64_t D = -disc;
    for (std::int64_t a = 1; 3 * a * a <= D; ++a)
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if ((b * b + D) % (4 * a) != 0) continue;
            const std::int64_t c = (b * b + D) / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) == 1) ++count;
        }
    return count;
}

} // namespace

TEST_CASE("reduced forms")
{
    CHECK(reduced_forms(-3) == std::vector<QuadraticForm>{{1, 1, 1}});
    CHECK(reduced_forms(-4) == std::vector<QuadraticForm>{{1, 0, 1}});
    CHECK(reduced_forms(-12) == std::vector<QuadraticForm>{{1, 0, 3}, {2, 2, 2}});
    for (std::int64_t disc = -3; disc >= -2000; --disc) {
        if (!is_negative_discriminant(disc)) {
            CHECK_THROWS_AS(reduced_forms(disc), precondition_error);
            continue;
        }
        for (const auto& f : reduced_forms(disc)) {
            CHECK(f.discriminant() == disc);
            CHECK(std::abs(f.b) <= f.a);
            CHECK(f.a <= f.c);
        }
    }
}

TEST_CASE("class numbers and units")
{
    CHECK(class_number_h(-3) == 1);
    CHECK(units_w(-3) == 6);
    CHECK(class_number_h(-4) == 1);
    CHECK(units_w(-4) == 4);
    CHECK(class_number_h(-23) == 3);
    CHECK(units_w(-23) == 2);
    CHECK(class_number_h(-47) == 5);
    CHECK(class_number_h(-163) == 1);
    CHECK(class_number_h(-20) == 2);
    for (std::int64_t disc = -3; disc >= -3000; --disc)
        if (is_negative_discriminant(disc)) CHECK(class_number_h(disc) == brute_h(disc));
}

TEST_CASE("extended Hurwitz class number")
{
    CHECK(hurwitz_H(0) == Rational(-1, 12));
    CHECK(hurwitz_H(3) == Rational(1, 3));
    CHECK(hurwitz_H(4) == Rational(1, 2));
    CHECK(hurwitz_H(-9) == Rational(-3, 2));
    CHECK(hurwitz_H(5) == 0);
    CHECK(hurwitz_H(1) == 0);
    CHECK(hurwitz_H(-1) == Rational(-1, 2));
    CHECK(hurwitz_H(-2) == 0);
    for (std::int64_t u = 1; u <= 40; ++u) CHECK(hurwitz_H(-u * u) == make_rational(-u, 2));
    for (std::int64_t D = 1; D <= 3000; ++D) {
        CHECK(hurwitz_H(D) == brute_H(D));
        CHECK(hurwitz_weighted_count(D) == brute_H(D));
        CHECK(hurwitz_H_uncached(D) == hurwitz_H(D));
    }
}

TEST_CASE("h0")
{
    CHECK(h0(4) == Rational(-1, 2));
    CHECK(h0(-3) == Rational(1, 3));
    CHECK(h0(-7) == 1);
    CHECK(h0(-4) == Rational(1, 2));
    CHECK(h0(5) == 0);
    CHECK(h0(-5) == 0);
    for (std::int64_t u = 1; u <= 30; ++u) CHECK(h0(u * u) == make_rational(-euler_phi(u), 2));
    CHECK(hurwitz_H(0) == h0(0));
}

TEST_CASE("inversion between H and h0")
{
    // Identity 1 checked term by term for small D.
    CHECK(hurwitz_H(12) == h0(-12) + h0(-3));
    CHECK(hurwitz_H(12) == Rational(4, 3));
    CHECK(hurwitz_H(16) == Rational(3, 2));
    CHECK(hurwitz_H(16) == h0(-16) + h0(-4));
    // The second identity at a negative square: h0(9) = H(-9) - H(-1).
    CHECK(h0(9) == hurwitz_H(-9) - hurwitz_H(-1));
    const auto r = check_inversion(2000);
    CHECK(r.ok());
    CHECK(r.checked > 0);
}

TEST_CASE("Kronecker-Hurwitz relation")
{
    CHECK(kronecker_hurwitz_sum(1) == 1);
    CHECK(kronecker_hurwitz_sum(2) == 3);
    // Oracle: scan |t| <= n + 1; past that t^2 - 4n lies strictly between (t-1)^2 and t^2.
    for (std::int64_t n = 1; n <= 60; ++n) {
        Rational brute = 0;
        for (std::int64_t t = -(n + 1); t <= n + 1; ++t) brute += hurwitz_H(4 * n - t * t);
        CHECK(brute == kronecker_hurwitz_sum(n));
        CHECK(brute == sigma1(n));
    }
    for (std::int64_t n = 1; n <= 500; ++n) CHECK(kronecker_hurwitz_check(n));
}

TEST_CASE("square defect traces")
{
    for (std::int64_t n = 1; n <= 200; ++n) {
        std::vector<std::int64_t> brute;
        for (std::int64_t t = 0; t <= n + 1; ++t) {
            const std::int64_t d = t * t - 4 * n;
            if (d > 0 && isqrt_exact(d)) brute.push_back(t);
        }
        CHECK(square_defect_traces(n) == brute);
    }
}

TEST_CASE("sign mutation breaks Kronecker-Hurwitz at n = 2")
{
    Conventions bad;
    bad.negative_square_sign = 1;
    CHECK(kronecker_hurwitz_check(1, bad));
    CHECK_FALSE(kronecker_hurwitz_check(2, bad));
}
