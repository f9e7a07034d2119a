// Traces of T_n composed with the Atkin-Lehner involution W_l on S_k(Gamma_0(N)), l || N.

#ifndef HECKE_ATKIN_LEHNER_HPP
#define HECKE_ATKIN_LEHNER_HPP

#include <cstdint>
#include <string>

#include "hecke/arith.hpp"
#include "hecke/gamma0_trace.hpp"

namespace hecke {

/// The multiplicative coefficient C_N(u, D), u | N, u^2 | D; D = 0 is treated as having
/// infinite valuation at every prime. It equals the Moebius inverse of the solution counts
/// only when D/u^2 = 0, 1 mod 4; elsewhere H(-D/u^2) = 0 and the value is never used.
std::int64_t c_N_of_D(std::int64_t u, std::int64_t D, std::int64_t N);

/// |{alpha in (Z/NZ)^x : alpha^2 - t alpha + n = 0 mod N}|.
std::int64_t s_count(std::int64_t t, std::int64_t n, std::int64_t N);

/// Cusp factor for T_n W_l; zero unless l | a + d.
Rational phi_N_ell(std::int64_t a, std::int64_t d, std::int64_t N, std::int64_t ell);

struct ALQuery {
    std::int64_t level;
    std::int64_t ell;
    int weight;
    std::int64_t n;

    ALQuery(std::int64_t level, std::int64_t ell, int weight, std::int64_t n);
    std::string key() const;
};

/// Rational result; rejects odd weight.
TraceResult trace_Tn_Wl(const ALQuery& q, const Conventions& conv = {});

} // namespace hecke

#endif
