#include "hecke/level4.hpp"

#include <algorithm>

#include "hecke/characters.hpp"
#include "hecke/class_numbers.hpp"
#include "hecke/gamma0_trace.hpp"
#include "hecke/gamma1_trace.hpp"

namespace hecke {

namespace {

BigInt require_integer(const Rational& q, const std::string& what)
{
    if (q.get_den() != 1) throw integrality_error(what + ": non-integral value " + to_string(q));
    return q.get_num();
}

// H(x / 4), zero when 4 does not divide x.
Rational hurwitz_quarter(std::int64_t x, const Conventions& conv)
{
    if (x % 4 != 0) return 0;
    return hurwitz_H(x / 4, conv);
}

std::string args(int k, std::int64_t n)
{
    return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

} // namespace

BigInt trace4_even_weight_odd_n(int k, std::int64_t n, const Conventions& conv)
{
    HECKE_REQUIRE(k >= 2 && k % 2 == 0, "weight must be even and at least 2");
    HECKE_REQUIRE(n >= 1 && n % 2 == 1, "n must be odd and positive");
    const unsigned w = static_cast<unsigned>(k - 2);
    Rational elliptic = 0;
    const std::int64_t bound = isqrt_floor(n);
    for (std::int64_t s = -bound; s <= bound; ++s) {
        const Rational h = hurwitz_H(n - s * s, conv);
        if (sgn(h) != 0) elliptic += h * gegenbauer(w, 2 * s, n);
    }
    Rational cusp = 0;
    for (std::int64_t a : divisors(n)) cusp += pow_big(std::min(a, n / a), static_cast<unsigned>(k - 1));
    Rational total = elliptic * -3 + cusp * Rational(-3, 2);
    if (k == 2) total += sigma1(n);
    return require_integer(total, "trace4_even_weight_odd_n" + args(k, n));
}

BigInt trace4_odd_weight_odd_n(int k, std::int64_t n, const Conventions& conv)
{
    HECKE_REQUIRE(k >= 3 && k % 2 == 1, "weight must be odd and at least 3");
    HECKE_REQUIRE(n >= 1 && n % 2 == 1, "n must be odd and positive");
    const unsigned w = static_cast<unsigned>(k - 2);
    Rational elliptic = 0;
    const std::int64_t bound = isqrt_floor(n);
    for (std::int64_t s = -bound; s <= bound; ++s) {
        if (s % 2 == 0) continue;
        const Rational h = hurwitz_H(n - s * s, conv) + 2 * hurwitz_quarter(n - s * s, conv);
        const std::int64_t e = 2 * s - n - 1;
        if (e % 4 != 0) {
            // The sign is undefined here; the class numbers have to vanish on their own.
            if (sgn(h) != 0)
                throw integrality_error("trace4_odd_weight_odd_n" + args(k, n) + ": nonzero term with undefined sign");
            continue;
        }
        if (sgn(h) == 0) continue;
        const int sign = mod_floor(e / 4, 2) == 0 ? 1 : -1;
        elliptic += h * gegenbauer(w, 2 * s, n) * sign;
    }
    Rational cusp = 0;
    for (std::int64_t a : divisors(n)) {
        const std::int64_t d = n / a;
        if ((a - d) % 4 != 0) continue;
        cusp += pow_big(std::min(a, d), static_cast<unsigned>(k - 1)) * eps4(a);
    }
    return require_integer(-elliptic - cusp, "trace4_odd_weight_odd_n" + args(k, n));
}

BigInt trace4_even_n(int k, std::int64_t n, const Conventions& conv)
{
    HECKE_REQUIRE(k >= 2, "weight must be at least 2");
    HECKE_REQUIRE(n >= 2 && n % 2 == 0, "n must be even and positive");
    const unsigned w = static_cast<unsigned>(k - 2);
    const bool odd_weight = k % 2 == 1;
    Rational elliptic = 0;
    const std::int64_t bound = isqrt_floor(4 * n);
    for (std::int64_t t = -bound; t <= bound; ++t) {
        if (mod_floor(t - n - 1, 4) != 0) continue;
        const Rational h = hurwitz_H(4 * n - t * t, conv);
        if (sgn(h) != 0) elliptic += h * gegenbauer(w, t, n);
    }
    Rational cusp = 0, delta = 0;
    for (std::int64_t a : divisors(n)) {
        if (a % 2 == 0) continue;
        const std::int64_t d = n / a;
        cusp += pow_big(std::min(a, d), static_cast<unsigned>(k - 1)) * (odd_weight ? eps4(a) : 1);
        delta += d;
    }
    Rational total = -elliptic - cusp;
    if (k == 2) total += delta;
    return require_integer(total, "trace4_even_n" + args(k, n));
}

QExpansion<CyclotomicNumber> trace_form(const GroupSpec& group, int k, std::int64_t precision, ParityFilter filter,
                                        const Conventions& conv)
{
    HECKE_REQUIRE(precision >= 1, "precision must be positive");
    std::string label;
    std::optional<DirichletCharacter> chi;
    if (group.kind == GroupSpec::Kind::gamma0) {
        chi = character_by_index(group.level, group.chi_index);
        label = "trace form of S_" + std::to_string(k) + "(Gamma0(" + std::to_string(group.level) + "), chi#" +
                std::to_string(group.chi_index) + ")";
    } else {
        label = "trace form of S_" + std::to_string(k) + "(Gamma1(" + std::to_string(group.level) + "))";
    }
    QExpansion<CyclotomicNumber> f(label, precision);
    for (std::int64_t n = 1; n <= precision; ++n) {
        if (filter == ParityFilter::odd && n % 2 == 0) continue;
        if (filter == ParityFilter::even && n % 2 == 1) continue;
        if (chi)
            f[n] = trace_S(TraceQuery(group.level, k, *chi, n), conv).value;
        else
            f[n] = CyclotomicNumber(trace_gamma1_S(Gamma1Query(group.level, k, n), conv).value);
    }
    return f;
}

RelationReport relation_table_check(std::int64_t d_max)
{
    HECKE_REQUIRE(d_max >= 0, "d_max must be non-negative");
    RelationReport report;
    for (std::int64_t D = 0; D <= d_max; ++D) {
        Rational rhs;
        const std::int64_t r8 = D % 8;
        if (r8 == 3)
            rhs = 4 * hurwitz_H(D);
        else if (r8 == 7)
            rhs = 2 * hurwitz_H(D);
        else if (D % 4 == 0)
            rhs = 3 * hurwitz_H(D) - 2 * hurwitz_H(D / 4);
        else
            continue;
        ++report.checked;
        if (Rational lhs = hurwitz_H(4 * D); lhs != rhs) {
            report.first_failure = RelationFailure{D, lhs, rhs};
            break;
        }
    }
    return report;
}

} // namespace hecke
