#include "hecke/atkin_lehner.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "hecke/class_numbers.hpp"

namespace hecke {

namespace {

std::int64_t ipow(std::int64_t p, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

// C_{p^a}(p^i, D) with b = v_p(D), b = INT_MAX / 2 standing in for D = 0.
std::int64_t local_c(std::int64_t p, int a, int i, int b, std::int64_t D)
{
    if (i == 0) return 1;
    if (i == a) return ipow(p, (a + 1) / 2);
    const bool same = (i - a) % 2 == 0;
    const int up = (i + 1) / 2;   // ceil(i/2)
    const int down = i / 2;       // floor(i/2)
    const std::int64_t unit = D == 0 ? 0 : D / ipow(p, b);
    if (p != 2) {
        if (same && i <= b - a) return ipow(p, up) - ipow(p, up - 1);
        if (i == b - a + 1) {
            if (same) return -ipow(p, up - 1);
            return ipow(p, down) * kronecker_symbol(unit, p);
        }
        return 0;
    }
    if (same && i <= b - a - 2) return ipow(2, up - 1);
    if (same && i == b - a - 1) return -ipow(2, up - 1);
    if (same && i == b - a) return ipow(2, up - 1) * eps4(unit);
    if (!same && i == b - a + 1 && mod_floor(unit, 4) == 1) return ipow(2, down) * kronecker_symbol(unit, 2);
    return 0;
}

} // namespace

std::int64_t c_N_of_D(std::int64_t u, std::int64_t D, std::int64_t N)
{
    HECKE_REQUIRE(N >= 1 && u >= 1 && N % u == 0, "u must divide N");
    HECKE_REQUIRE(D % (u * u) == 0, "u^2 must divide D");
    std::int64_t c = 1;
    for (const auto& [pu, a] : factor(static_cast<std::uint64_t>(N))) {
        const auto p = static_cast<std::int64_t>(pu);
        const int b = D == 0 ? INT_MAX / 2 : valuation(D, p);
        c *= local_c(p, a, valuation(u, p), b, D);
        if (c == 0) break;
    }
    return c;
}

std::int64_t s_count(std::int64_t t, std::int64_t n, std::int64_t N)
{
    return static_cast<std::int64_t>(s_N(1, t, n, N).size());
}

Rational phi_N_ell(std::int64_t a, std::int64_t d, std::int64_t N, std::int64_t ell)
{
    HECKE_REQUIRE(a >= 1 && d >= 1, "a and d must be positive");
    HECKE_REQUIRE(ell >= 1 && N % ell == 0 && std::gcd(ell, N / ell) == 1, "ell must exactly divide N");
    if ((a + d) % ell != 0) return 0;
    const std::int64_t ell2 = N / ell;
    std::int64_t total = 0;
    for (std::int64_t r : divisors(ell2)) {
        const std::int64_t s = ell2 / r;
        const std::int64_t g = std::gcd(r, s);
        if ((a - d) % g != 0 || std::gcd(r, a) != 1 || std::gcd(s, d) != 1) continue;
        total += euler_phi(g);
    }
    return make_rational(BigInt(static_cast<long>(euler_phi(ell) * total)), BigInt(static_cast<long>(ell)));
}

ALQuery::ALQuery(std::int64_t level, std::int64_t ell, int weight, std::int64_t n)
    : level(level), ell(ell), weight(weight), n(n)
{
    HECKE_REQUIRE(level >= 1 && n >= 1, "level and index must be positive");
    HECKE_REQUIRE(ell >= 1 && level % ell == 0 && std::gcd(ell, level / ell) == 1, "ell must exactly divide the level");
    HECKE_REQUIRE(weight >= 2 && weight % 2 == 0, "the Atkin-Lehner trace is only defined here for even weight k >= 2");
}

std::string ALQuery::key() const
{
    return "N=" + std::to_string(level) + ",l=" + std::to_string(ell) + ",k=" + std::to_string(weight) +
           ",n=" + std::to_string(n);
}

TraceResult trace_Tn_Wl(const ALQuery& q, const Conventions& conv)
{
    const std::int64_t ell = q.ell, ell2 = q.level / q.ell;
    const std::int64_t m = ell * q.n;
    const unsigned w = static_cast<unsigned>(q.weight - 2);
    const Rational scale = make_rational(1, pow_big(ell, w / 2));
    TraceResult r;

    Rational elliptic = 0;
    const std::int64_t bound = isqrt_floor(4 * m);
    for (std::int64_t t = -bound; t <= bound; ++t) {
        if (t % ell != 0 || t * t == 4 * m) continue;
        const std::int64_t D = 4 * m - t * t;
        const std::int64_t count = s_count(t, m, ell2);
        if (count == 0) continue;
        Rational inner = 0;
        for (std::int64_t u : divisors(ell)) {
            const int mu = mobius(u);
            if (mu == 0 || D % (u * u) != 0) continue;
            for (std::int64_t u2 : divisors(ell2)) {
                const std::int64_t uu = u * u2;
                if (D % (uu * uu) != 0) continue;
                const Rational h = hurwitz_H(D / (uu * uu), conv);
                if (sgn(h) == 0) continue;
                inner += h * mu * c_N_of_D(u2, -D, ell2);
            }
        }
        elliptic += inner * count * gegenbauer(w, t, m);
    }
    r.elliptic = CyclotomicNumber(elliptic * scale * Rational(-1, 2));

    if (ell == 1) {
        if (auto s = isqrt_exact(q.n); s && std::gcd(q.n, q.level) == 1)
            r.boundary = CyclotomicNumber(make_rational(phi1(q.level) * (q.weight - 1), 12) * Rational(pow_big(*s, w)));
    }

    Rational cusp = 0;
    for (std::int64_t a : divisors(m)) {
        const std::int64_t d = m / a;
        if ((a + d) % ell != 0) continue;
        cusp += phi_N_ell(a, d, q.level, ell) * pow_big(std::min(a, d), static_cast<unsigned>(q.weight - 1));
    }
    r.cusp = CyclotomicNumber(cusp * scale * Rational(-1, 2));

    if (q.weight == 2) r.delta = CyclotomicNumber(Rational(sigma1_coprime(q.n, q.level)));
    r.assemble();
    r.require_integral("trace_Tn_Wl(" + q.key() + ")");
    return r;
}

} // namespace hecke
