#include <doctest.h>

#include "hecke/oracles.hpp"

using namespace hecke;

TEST_CASE("Delta")
{
    const auto d = delta_qexp(40);
    CHECK(d[0] == 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == -24);
    CHECK(d[5] == 4830);
    // Oracle: expand q prod (1 - q^m)^24 one factor at a time with machine integers.
    std::vector<long> c(41, 0);
    c[1] = 1;
    for (int m = 1; m <= 40; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (int j = 40; j >= m; --j) c[j] -= c[j - m];
    for (int n = 0; n <= 40; ++n) CHECK(d[n] == c[n]);
    // Ramanujan's congruence mod 691.
    for (std::int64_t n = 1; n <= 40; ++n) CHECK((d[n] - sigma(n, 11)) % 691 == 0);
}

TEST_CASE("Bernoulli and Eisenstein")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(7) == 0);
    const auto e4 = eisenstein(4, 20), e6 = eisenstein(6, 20), e8 = eisenstein(8, 20), e10 = eisenstein(10, 20);
    CHECK(e4[1] == 240);
    CHECK(e6[1] == -504);
    // Dimension-one identities.
    const auto e44 = e4 * e4, e46 = e4 * e6;
    for (std::int64_t n = 0; n <= 20; ++n) {
        CHECK(e44[n] == e8[n]);
        CHECK(e46[n] == e10[n]);
    }
    // 1728 Delta = E4^3 - E6^2.
    const auto d = delta_qexp(20);
    const auto lhs = e4 * e4 * e4, e66 = e6 * e6;
    for (std::int64_t n = 0; n <= 20; ++n) CHECK(lhs[n] - e66[n] == 1728 * Rational(d[n]));
}

TEST_CASE("level 1 eigenforms")
{
    CHECK(level1_eigen_traces(16, 5)[2] == 216);
    CHECK(level1_eigen_traces(18, 5)[2] == -528);
    for (int k : {12, 16, 18, 20, 22, 26}) {
        const auto f = level1_eigen_traces(k, 30);
        CHECK(f[1] == 1);
        // Hecke relations.
        CHECK(f[6] == f[2] * f[3]);
        CHECK(f[4] == f[2] * f[2] - Rational(pow_big(2, static_cast<unsigned>(k - 1))));
        CHECK(f[9] == f[3] * f[3] - Rational(pow_big(3, static_cast<unsigned>(k - 1))));
    }
    CHECK_THROWS_AS(level1_eigen_traces(14, 5), precondition_error);
    CHECK_THROWS_AS(level1_eigen_traces(24, 5), precondition_error);
}

TEST_CASE("genus of X_0(N)")
{
    CHECK(genus_X0(1) == 0);
    CHECK(genus_X0(11) == 1);
    CHECK(genus_X0(37) == 2);
    for (std::int64_t N : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25}) CHECK(genus_X0(N) == 0);
    for (std::int64_t N : {11, 14, 15, 17, 19, 20, 21, 24, 27, 32, 36, 49}) CHECK(genus_X0(N) == 1);
}

TEST_CASE("consistency suites")
{
    for (const auto& name : suite_names()) {
        const auto r = consistency_suite(name);
        CHECK_MESSAGE(r.ok(), name << ": " << (r.failures.empty() ? "" : r.failures.front().key));
        CHECK(r.cases > 0);
    }
    CHECK_THROWS_AS(consistency_suite("no-such-suite"), precondition_error);
}

TEST_CASE("mutations are detected")
{
    Conventions sign;
    sign.negative_square_sign = 1;
    const auto kh = consistency_suite("class-numbers", {}, sign);
    CHECK_FALSE(kh.ok());

    Conventions chi;
    chi.residue_evaluation = ResidueEvaluation::naive_representative;
    const auto cs = consistency_suite("character-sum", {}, chi);
    CHECK_FALSE(cs.ok());
}
