// Integer and multiplicative-function substrate shared by every trace engine.

#ifndef HECKE_ARITH_HPP
#define HECKE_ARITH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hecke {

using BigInt = mpz_class;
/// Always canonical (lowest terms, positive denominator) after arithmetic.
using Rational = mpq_class;

/// Raised when an operation is called outside its documented domain.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A sum that must be integral was not. Always an engine or convention bug.
class integrality_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class crt_incompatible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

#define HECKE_REQUIRE(cond, msg)                                                    \
    do {                                                                            \
        if (!(cond)) throw ::hecke::precondition_error(std::string(__func__) + ": " + (msg)); \
    } while (0)

struct PrimePower {
    std::uint64_t prime;
    int exponent;

    bool operator==(const PrimePower&) const = default;
};

/// Sorted by prime; empty for n = 1.
using Factorization = std::vector<PrimePower>;

Factorization factor(std::uint64_t n);
bool is_prime(std::uint64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> divisors(const Factorization& f);

int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
/// Index of Gamma_0(N) in SL_2(Z): N * prod_{p|N} (1 + 1/p).
std::int64_t phi1(std::int64_t n);
std::int64_t sigma1(std::int64_t n);
/// Sum of n/d over divisors d of n with gcd(d, N) = 1.
std::int64_t sigma1_coprime(std::int64_t n, std::int64_t level);
/// Sum of d^power over divisors d of n.
BigInt sigma(std::int64_t n, unsigned power);

/// Coefficient of x^w in 1/(1 - t x + n x^2).
BigInt gegenbauer(unsigned w, const BigInt& t, const BigInt& n);
inline BigInt gegenbauer(unsigned w, std::int64_t t, std::int64_t n)
{
    return gegenbauer(w, BigInt(static_cast<long>(t)), BigInt(static_cast<long>(n)));
}

struct Residue {
    std::int64_t value;    ///< in [0, modulus)
    std::int64_t modulus;

    bool operator==(const Residue&) const = default;
};

/// Combines congruences x = r_i (mod m_i); moduli need not be coprime.
/// Throws crt_incompatible when two congruences conflict.
Residue crt_solve(std::span<const Residue> congruences);

/// Kronecker symbol (a/n) for n >= 1; the Legendre symbol when n is an odd prime.
int kronecker_symbol(std::int64_t a, std::int64_t n);
/// Nontrivial character mod 4.
int eps4(std::int64_t a);

std::optional<std::int64_t> isqrt_exact(std::int64_t n);
std::int64_t isqrt_floor(std::int64_t n);

/// Exponent of p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

/// Least non-negative residue.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m);

BigInt pow_big(std::int64_t base, unsigned exp);

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q);

} // namespace hecke

#endif
