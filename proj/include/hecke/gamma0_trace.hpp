// Traces of Hecke operators on S_k(Gamma_0(N), chi) and on M_k + S_k.

#ifndef HECKE_GAMMA0_TRACE_HPP
#define HECKE_GAMMA0_TRACE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/characters.hpp"
#include "hecke/conventions.hpp"
#include "hecke/cyclotomic.hpp"

namespace hecke {

/// alpha in (Z/NZ)^x with alpha^2 - t alpha + n = 0 mod N u, sorted.
/// Requires u | N and u^2 | t^2 - 4n. Solved per prime power by lifting, joined by CRT.
std::vector<std::int64_t> s_N(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N);
/// Same set by scanning every residue mod N.
std::vector<std::int64_t> s_N_scan(std::int64_t u, std::int64_t t, std::int64_t n, std::int64_t N);

/// phi1(N)/phi1(N/u) * sum of chi over s_N(u, t, n).
CyclotomicNumber B_N_chi(std::int64_t u, std::int64_t t, std::int64_t n, const DirichletCharacter& chi);
/// Moebius inverse of B_N_chi in u.
CyclotomicNumber C_N_chi(std::int64_t u, std::int64_t t, std::int64_t n, const DirichletCharacter& chi);
/// C_N_chi(u, t, n) for every admissible u | N (u^2 | t^2 - 4n), keyed by u.
std::map<std::int64_t, CyclotomicNumber> C_N_chi_all(std::int64_t t, std::int64_t n, const DirichletCharacter& chi);

/// Cusp sum over factorisations N = rs with (r, s) | (N / c(chi), a - d), of phi((r, s)) chi(alpha),
/// alpha = a mod r, alpha = d mod s, read modulo N / (r, s).
CyclotomicNumber phi_N_chi(std::int64_t a, std::int64_t d, const DirichletCharacter& chi, const Conventions& conv = {});

/// Contribution of t^2 = 4n: (phi1(N)/12) (k-1) n^(k/2-1) chi(sqrt n) for square n, else 0.
CyclotomicNumber square_term(const DirichletCharacter& chi, int k, std::int64_t n);

struct TraceQuery {
    std::int64_t level;
    int weight;
    DirichletCharacter chi;
    std::int64_t n;

    TraceQuery(std::int64_t level, int weight, DirichletCharacter chi, std::int64_t n);
    /// Trivial character.
    TraceQuery(std::int64_t level, int weight, std::int64_t n);

    std::string key() const;
};

struct TraceResult {
    CyclotomicNumber value;
    // Breakdown; value is their sum. For M_k + S_k, cusp holds the t^2 > 4n part.
    CyclotomicNumber elliptic;
    CyclotomicNumber boundary;
    CyclotomicNumber cusp;
    CyclotomicNumber delta;

    void assemble();
    /// Throws integrality_error unless value is an algebraic integer.
    void require_integral(const std::string& what) const;
};

TraceResult trace_S(const TraceQuery& q, const Conventions& conv = {});
TraceResult trace_M_plus_S(const TraceQuery& q, const Conventions& conv = {});

} // namespace hecke

#endif
