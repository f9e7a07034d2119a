#include "hecke/gamma1_trace.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/class_numbers.hpp"

namespace hecke {

namespace {

void check_u(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    HECKE_REQUIRE(N >= 1 && u >= 1 && N % u == 0, "u must divide N");
    HECKE_REQUIRE((t * t - 4 * n) % (u * u) == 0, "u^2 must divide t^2 - 4n");
}

Rational B_unchecked(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    if ((t - n - 1) % (N * u) != 0) return 0;
    return Rational(phi1(N) / phi1(N / u));
}

Rational D_unchecked(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    Rational total = 0;
    for (std::int64_t d : divisors(u))
        if (int mu = mobius(d)) total += B_unchecked(u / d, t, n, N) * mu;
    return total;
}

// sum over u | N, u^2 | 4n - t^2 of H((4n - t^2)/u^2) D_N(u, t, n).
Rational weighted_class_sum(std::int64_t t, std::int64_t n, std::int64_t N, const Conventions& conv)
{
    const std::int64_t D = 4 * n - t * t;
    Rational inner = 0;
    for (std::int64_t u : divisors(N)) {
        if (D % (u * u) != 0) continue;
        const Rational h = hurwitz_H(D / (u * u), conv);
        if (sgn(h) == 0) continue;
        inner += h * D_unchecked(u, t, n, N);
    }
    return inner;
}

void finish(Gamma1Result& r, const std::string& what)
{
    r.value = r.elliptic + r.boundary + r.cusp + r.delta;
    if (r.value.get_den() != 1) throw integrality_error(what + ": non-integral trace " + to_string(r.value));
}

} // namespace

Rational B_N(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    check_u(u, t, n, N);
    return B_unchecked(u, t, n, N);
}

Rational D_N(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    check_u(u, t, n, N);
    return D_unchecked(u, t, n, N);
}

Rational psi_N(std::int64_t a, std::int64_t d, std::int64_t N)
{
    HECKE_REQUIRE(N >= 1, "level must be positive");
    std::int64_t total = 0;
    for (std::int64_t r : divisors(N)) {
        const std::int64_t s = N / r;
        if ((a - 1) % r != 0 || (d - 1) % s != 0) continue;
        const std::int64_t g = std::gcd(r, s);
        total += euler_phi(g) * euler_phi(N / g);
    }
    return Rational(total);
}

Gamma1Query::Gamma1Query(std::int64_t level, int weight, std::int64_t n) : level(level), weight(weight), n(n)
{
    HECKE_REQUIRE(level >= 1, "level must be positive");
    HECKE_REQUIRE(weight >= 2, "weight must be at least 2");
    HECKE_REQUIRE(n >= 1, "Hecke index must be positive");
}

std::string Gamma1Query::key() const
{
    return "N=" + std::to_string(level) + ",k=" + std::to_string(weight) + ",n=" + std::to_string(n);
}

Gamma1Result trace_gamma1_MS(const Gamma1Query& q, const Conventions& conv)
{
    const std::int64_t N = q.level, n = q.n;
    const unsigned w = static_cast<unsigned>(q.weight - 2);
    Gamma1Result r;
    auto term = [&](std::int64_t t) -> Rational {
        if ((t - n - 1) % N != 0) return 0;
        const Rational inner = weighted_class_sum(t, n, N, conv);
        if (sgn(inner) == 0) return 0;
        return inner * gegenbauer(w, t, n);
    };
    const std::int64_t bound = isqrt_floor(4 * n);
    for (std::int64_t t = -bound; t <= bound; ++t) {
        if (t * t == 4 * n)
            r.boundary += term(t);
        else
            r.elliptic += term(t);
    }
    for (std::int64_t t : square_defect_traces(n)) r.cusp += term(t) + term(-t);
    const Rational scale = -Rational(euler_phi(N));
    r.elliptic *= scale;
    r.boundary *= scale;
    r.cusp *= scale;
    if (q.weight == 2) r.delta = sigma1_coprime(n, N);
    finish(r, "trace_gamma1_MS(" + q.key() + ")");
    return r;
}

Gamma1Result trace_gamma1_S(const Gamma1Query& q, const Conventions& conv)
{
    const std::int64_t N = q.level, n = q.n;
    const int k = q.weight;
    const unsigned w = static_cast<unsigned>(k - 2);
    const Rational half_phi = make_rational(euler_phi(N), 2);
    Gamma1Result r;

    const std::int64_t bound = isqrt_floor(4 * n);
    for (std::int64_t t = -bound; t <= bound; ++t) {
        if (t * t == 4 * n || (t - n - 1) % N != 0) continue;
        const Rational inner = weighted_class_sum(t, n, N, conv);
        if (sgn(inner) != 0) r.elliptic += inner * gegenbauer(w, t, n);
    }
    r.elliptic *= -half_phi;

    if (auto s = isqrt_exact(n)) {
        if (conv.boundary_via_class_numbers) {
            for (std::int64_t t : {-2 * *s, 2 * *s}) {
                if ((t - n - 1) % N != 0) continue;
                Rational inner = 0;
                for (std::int64_t u : divisors(N)) inner += D_unchecked(u, t, n, N);
                r.boundary += inner * hurwitz_H(0, conv) * gegenbauer(w, t, n);
            }
            r.boundary *= -half_phi;
        } else {
            const int hits = (mod_floor(*s - 1, N) == 0 ? 1 : 0) + (mod_floor(*s + 1, N) == 0 ? (k % 2 == 0 ? 1 : -1) : 0);
            r.boundary = half_phi * make_rational(phi1(N) * (k - 1), 12) * pow_big(*s, w) * hits;
        }
    }

    const int sign = k % 2 == 0 ? 1 : -1;
    for (std::int64_t a : divisors(n)) {
        const std::int64_t d = n / a;
        const Rational psi = psi_N(a, d, N) + psi_N(-a, -d, N) * sign;
        if (sgn(psi) != 0) r.cusp += psi * pow_big(std::min(a, d), static_cast<unsigned>(k - 1));
    }
    r.cusp *= Rational(-1, 4);

    if (k == 2) r.delta = sigma1_coprime(n, N);
    finish(r, "trace_gamma1_S(" + q.key() + ")");
    return r;
}

namespace {

Rational cor_c1_MS_impl(const Gamma1Query& q, bool as_printed)
{
    const std::int64_t N = q.level, n = q.n;
    HECKE_REQUIRE(n >= 2 && N > 2 * n + 2, "closed form needs n >= 2 and N > 2n + 2");
    // Only t = n + 1 survives; H(-((n-1)/u)^2) = -(n-1)/(2u) against D_N(u, n+1, n).
    Rational sum = 0;
    for (std::int64_t u : divisors(n - 1)) {
        const std::int64_t v = as_printed ? u : (n - 1) / u;
        sum += euler_phi(u) * (phi1(N) / phi1(N / std::gcd(v, N)));
    }
    const BigInt geometric = (pow_big(n, static_cast<unsigned>(q.weight - 1)) - 1) / (n - 1);
    Rational value = make_rational(euler_phi(N), 2) * geometric * sum;
    if (q.weight == 2) value += sigma1_coprime(n, N);
    return value;
}

} // namespace

Rational cor_c1_MS(const Gamma1Query& q)
{
    return cor_c1_MS_impl(q, false);
}

Rational cor_c1_MS_as_printed(const Gamma1Query& q)
{
    return cor_c1_MS_impl(q, true);
}

Rational cor_c1_S(const Gamma1Query& q)
{
    const std::int64_t N = q.level, n = q.n;
    HECKE_REQUIRE(n >= 2 && N > 2 * n + 2, "closed form needs n >= 2 and N > 2n + 2");
    Rational sum = 0;
    for (std::int64_t u : divisors(std::gcd(N, n - 1))) {
        const std::int64_t g = std::gcd(u, N / u);
        sum += euler_phi(g) * euler_phi(N / g);
    }
    Rational value = sum * Rational(-1, 2);
    if (q.weight == 2) value += sigma1_coprime(n, N);
    return value;
}

LimitReport limit_check(std::int64_t n, int k, std::int64_t level_lo, std::int64_t level_hi)
{
    HECKE_REQUIRE(n > 1, "n must exceed 1");
    LimitReport report;
    for (std::int64_t N = std::max(level_lo, 2 * n + 3); N <= level_hi; ++N) {
        if (std::gcd(N, n - 1) != 1) continue;
        ++report.checked;
        const auto r = trace_gamma1_S(Gamma1Query(N, k, n));
        const Rational ratio = (r.value - r.delta) / euler_phi(N);
        if (ratio != Rational(-1, 2)) report.failures.push_back({N, ratio});
    }
    return report;
}

} // namespace hecke
