#include "hecke/gamma0_trace.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/class_numbers.hpp"

namespace hecke {

namespace {

std::int64_t quad_mod(std::int64_t x, std::int64_t t, std::int64_t n, std::int64_t m)
{
    const __int128 v = static_cast<__int128>(x) * x - static_cast<__int128>(t) * x + n;
    auto r = static_cast<std::int64_t>(v % m);
    return r < 0 ? r + m : r;
}

void check_u(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    HECKE_REQUIRE(N >= 1 && u >= 1 && N % u == 0, "u must divide N");
    const __int128 disc = static_cast<__int128>(t) * t - 4 * static_cast<__int128>(n);
    HECKE_REQUIRE(disc % (static_cast<__int128>(u) * u) == 0, "u^2 must divide t^2 - 4n");
}

// Units x mod p^a with x^2 - t x + n = 0 mod p^(a+v).
std::vector<std::int64_t> local_roots(std::int64_t p, int a, int v, std::int64_t t, std::int64_t n)
{
    std::vector<std::int64_t> roots;
    for (std::int64_t x = 1; x < p; ++x)
        if (quad_mod(x, t, n, p) == 0) roots.push_back(x);
    std::int64_t pj = p;
    for (int j = 1; j < a && !roots.empty(); ++j) {
        std::vector<std::int64_t> next;
        for (std::int64_t x : roots)
            for (std::int64_t i = 0; i < p; ++i) {
                const std::int64_t y = x + i * pj;
                if (quad_mod(y, t, n, pj * p) == 0) next.push_back(y);
            }
        roots = std::move(next);
        pj *= p;
    }
    if (v > 0) {
        std::int64_t big = pj;
        for (int i = 0; i < v; ++i) big *= p;
        std::erase_if(roots, [&](std::int64_t x) { return quad_mod(x, t, n, big) != 0; });
    }
    return roots;
}

} // namespace

std::vector<std::int64_t> s_N(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    check_u(u, t, n, N);
    std::vector<std::int64_t> sols{0};
    std::int64_t mod = 1;
    for (const auto& [pu, a] : factor(static_cast<std::uint64_t>(N))) {
        const auto p = static_cast<std::int64_t>(pu);
        std::int64_t pa = 1;
        for (int i = 0; i < a; ++i) pa *= p;
        const auto local = local_roots(p, a, valuation(u, p), t, n);
        std::vector<std::int64_t> joined;
        joined.reserve(sols.size() * local.size());
        for (std::int64_t x : sols)
            for (std::int64_t y : local) {
                const Residue parts[] = {{x, mod}, {y, pa}};
                joined.push_back(crt_solve(parts).value);
            }
        sols = std::move(joined);
        mod *= pa;
        if (sols.empty()) break;
    }
    std::sort(sols.begin(), sols.end());
    return sols;
}

std::vector<std::int64_t> s_N_scan(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N)
{
    check_u(u, t, n, N);
    std::vector<std::int64_t> sols;
    for (std::int64_t x = 0; x < N; ++x)
        if (std::gcd(x, N) == 1 && quad_mod(x, t, n, N * u) == 0) sols.push_back(x);
    return sols;
}

CyclotomicNumber B_N_chi(std::int64_t u, std::int64_t t, std::int64_t n, const DirichletCharacter& chi)
{
    const std::int64_t N = chi.modulus();
    const auto sols = s_N(u, t, n, N);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(chi.order()), 0);
    for (std::int64_t x : sols) ++counts[static_cast<std::size_t>(*chi.angle(x))];
    return CyclotomicNumber::from_power_counts(chi.order(), counts) * Rational(phi1(N) / phi1(N / u));
}

CyclotomicNumber C_N_chi(std::int64_t u, std::int64_t t, std::int64_t n, const DirichletCharacter& chi)
{
    check_u(u, t, n, chi.modulus());
    CyclotomicNumber total;
    for (std::int64_t d : divisors(u)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        total += B_N_chi(u / d, t, n, chi) * Rational(mu);
    }
    return total;
}

std::map<std::int64_t, CyclotomicNumber> C_N_chi_all(std::int64_t t, std::int64_t n, const DirichletCharacter& chi)
{
    const std::int64_t N = chi.modulus();
    const __int128 disc = static_cast<__int128>(t) * t - 4 * static_cast<__int128>(n);
    std::map<std::int64_t, CyclotomicNumber> B;
    for (std::int64_t u : divisors(N))
        if (disc % (static_cast<__int128>(u) * u) == 0) B.emplace(u, B_N_chi(u, t, n, chi));
    // The admissible set is closed under taking divisors, so the inversion stays inside B.
    std::map<std::int64_t, CyclotomicNumber> C;
    for (const auto& [u, _] : B) {
        CyclotomicNumber c;
        for (std::int64_t d : divisors(u))
            if (int mu = mobius(d)) c += B.at(u / d) * Rational(mu);
        C.emplace(u, std::move(c));
    }
    return C;
}

CyclotomicNumber phi_N_chi(std::int64_t a, std::int64_t d, const DirichletCharacter& chi, const Conventions& conv)
{
    const std::int64_t N = chi.modulus();
    const std::int64_t free_part = N / chi.conductor();
    const bool literal = conv.residue_evaluation == ResidueEvaluation::induced_primitive;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(chi.order()), 0);
    for (std::int64_t r : divisors(N)) {
        const std::int64_t s = N / r;
        const std::int64_t g = std::gcd(r, s);
        if ((a - d) % g != 0) continue;
        if (literal && free_part % g != 0) continue;
        const Residue parts[] = {{mod_floor(a, r), r}, {mod_floor(d, s), s}};
        const Residue alpha = crt_solve(parts);
        if (auto ang = chi.angle_of_residue(alpha.value, alpha.modulus, conv.residue_evaluation))
            counts[static_cast<std::size_t>(*ang)] += euler_phi(g);
    }
    return CyclotomicNumber::from_power_counts(chi.order(), counts);
}

CyclotomicNumber square_term(const DirichletCharacter& chi, int k, std::int64_t n)
{
    const auto s = isqrt_exact(n);
    if (!s) return {};
    const auto ang = chi.angle(*s);
    if (!ang) return {};
    const Rational c = make_rational(phi1(chi.modulus()) * (k - 1), 12) * Rational(pow_big(*s, static_cast<unsigned>(k - 2)));
    return CyclotomicNumber::root_of_unity(chi.order(), *ang) * c;
}

TraceQuery::TraceQuery(std::int64_t level, int weight, DirichletCharacter chi, std::int64_t n)
    : level(level), weight(weight), chi(std::move(chi)), n(n)
{
    HECKE_REQUIRE(level >= 1, "level must be positive");
    HECKE_REQUIRE(weight >= 2, "weight must be at least 2");
    HECKE_REQUIRE(n >= 1, "Hecke index must be positive");
    HECKE_REQUIRE(this->chi.modulus() == level, "character modulus must equal the level");
}

TraceQuery::TraceQuery(std::int64_t level, int weight, std::int64_t n)
    : TraceQuery(level, weight, DirichletCharacter(level), n)
{
}

std::string TraceQuery::key() const
{
    return "N=" + std::to_string(level) + ",k=" + std::to_string(weight) + ",chi=" + std::to_string(chi.index()) +
           ",n=" + std::to_string(n);
}

void TraceResult::assemble()
{
    value = elliptic + boundary + cusp + delta;
    value = value.simplified();
}

void TraceResult::require_integral(const std::string& what) const
{
    if (!value.is_integral()) throw integrality_error(what + ": non-integral trace " + value.to_string());
}

namespace {

CyclotomicNumber weighted_class_sum(std::int64_t t, std::int64_t n, const DirichletCharacter& chi, const Conventions& conv)
{
    const std::int64_t D = 4 * n - t * t;
    CyclotomicNumber inner;
    for (const auto& [u, c] : C_N_chi_all(t, n, chi)) {
        const Rational h = hurwitz_H(D / (u * u), conv);
        if (sgn(h) != 0) inner += c * h;
    }
    return inner;
}

CyclotomicNumber cusp_sum(const TraceQuery& q, const Conventions& conv)
{
    CyclotomicNumber total;
    for (std::int64_t a : divisors(q.n)) {
        const std::int64_t d = q.n / a;
        const BigInt m = pow_big(std::min(a, d), static_cast<unsigned>(q.weight - 1));
        total += phi_N_chi(a, d, q.chi, conv) * m;
    }
    return total * Rational(-1, 2);
}

CyclotomicNumber delta_term(const TraceQuery& q)
{
    if (q.weight != 2 || !q.chi.is_trivial()) return {};
    return CyclotomicNumber(Rational(sigma1_coprime(q.n, q.level)));
}

bool parity_matches(const TraceQuery& q)
{
    return q.chi.parity() == (q.weight % 2 == 0 ? 1 : -1);
}

} // namespace

TraceResult trace_S(const TraceQuery& q, const Conventions& conv)
{
    TraceResult r;
    if (!parity_matches(q)) return r;
    const unsigned w = static_cast<unsigned>(q.weight - 2);
    const std::int64_t bound = isqrt_floor(4 * q.n);
    for (std::int64_t t = -bound; t <= bound; ++t) {
        if (t * t == 4 * q.n) continue;
        CyclotomicNumber inner = weighted_class_sum(t, q.n, q.chi, conv);
        if (!inner.is_zero()) r.elliptic += inner * gegenbauer(w, t, q.n);
    }
    r.elliptic *= Rational(-1, 2);

    if (conv.boundary_via_class_numbers) {
        if (auto s = isqrt_exact(q.n)) {
            for (std::int64_t t : {-2 * *s, 2 * *s}) {
                CyclotomicNumber inner;
                for (const auto& [u, c] : C_N_chi_all(t, q.n, q.chi)) inner += c * hurwitz_H(0, conv);
                r.boundary += inner * gegenbauer(w, t, q.n);
            }
            r.boundary *= Rational(-1, 2);
        }
    } else {
        r.boundary = square_term(q.chi, q.weight, q.n);
    }

    r.cusp = cusp_sum(q, conv);
    r.delta = delta_term(q);
    r.assemble();
    r.require_integral("trace_S(" + q.key() + ")");
    return r;
}

TraceResult trace_M_plus_S(const TraceQuery& q, const Conventions& conv)
{
    TraceResult r;
    const unsigned w = static_cast<unsigned>(q.weight - 2);
    auto term = [&](std::int64_t t) { return weighted_class_sum(t, q.n, q.chi, conv) * gegenbauer(w, t, q.n); };

    const std::int64_t bound = isqrt_floor(4 * q.n);
    for (std::int64_t t = -bound; t <= bound; ++t) {
        if (t * t == 4 * q.n)
            r.boundary += term(t);
        else
            r.elliptic += term(t);
    }
    for (std::int64_t t : square_defect_traces(q.n)) {
        r.cusp += term(t);
        r.cusp += term(-t);
    }
    r.elliptic *= Rational(-1);
    r.boundary *= Rational(-1);
    r.cusp *= Rational(-1);
    r.delta = delta_term(q);
    r.assemble();
    r.require_integral("trace_M_plus_S(" + q.key() + ")");
    return r;
}

} // namespace hecke
