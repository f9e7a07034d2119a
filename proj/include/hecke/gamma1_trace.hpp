// Traces of Hecke operators on S_k(Gamma_1(N)) and M_k + S_k, and the closed forms
// valid for N > 2n + 2.

#ifndef HECKE_GAMMA1_TRACE_HPP
#define HECKE_GAMMA1_TRACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/conventions.hpp"

namespace hecke {

/// phi1(N)/phi1(N/u) when N u | t - n - 1, else 0. Requires u | N, u^2 | t^2 - 4n.
Rational B_N(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N);
/// Moebius inverse of B_N in u.
Rational D_N(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N);
/// Sum over N = rs with r | a - 1 and s | d - 1 of phi((r,s)) phi(N/(r,s)). Any sign of a, d.
Rational psi_N(std::int64_t a, std::int64_t d, std::int64_t N);

struct Gamma1Query {
    std::int64_t level;
    int weight;
    std::int64_t n;

    Gamma1Query(std::int64_t level, int weight, std::int64_t n);
    std::string key() const;
};

struct Gamma1Result {
    Rational value;
    Rational elliptic, boundary, cusp, delta;
};

Gamma1Result trace_gamma1_MS(const Gamma1Query& q, const Conventions& conv = {});
Gamma1Result trace_gamma1_S(const Gamma1Query& q, const Conventions& conv = {});

/// Closed forms for N > 2n + 2 and n >= 2.
///
/// cor_c1_MS weights phi(u), u | n-1, by phi1(N)/phi1(N/((n-1)/u, N)), which is what the t = n+1
/// term evaluates to. The usual statement weights it by phi1(N)/phi1(N/(u, N)) instead
/// (cor_c1_MS_as_printed); the two agree whenever gcd(N, n-1) = 1.
Rational cor_c1_MS(const Gamma1Query& q);
Rational cor_c1_MS_as_printed(const Gamma1Query& q);
Rational cor_c1_S(const Gamma1Query& q);

struct LimitFailure {
    std::int64_t level;
    Rational ratio;
};

struct LimitReport {
    std::int64_t checked = 0;
    std::vector<LimitFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// For N in [n_lo, n_hi] with N > 2n + 2 and gcd(N, n - 1) = 1, checks
/// (trace_gamma1_S - delta term) / phi(N) = -1/2.
LimitReport limit_check(std::int64_t n, int k, std::int64_t level_lo, std::int64_t level_hi);

} // namespace hecke

#endif
