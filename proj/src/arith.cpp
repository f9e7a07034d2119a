#include "hecke/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hecke {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_u64(u64 b, u64 e, u64 m)
{
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n)
{
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant; n must be an odd composite.
u64 pollard_rho(u64 n)
{
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_large(u64 n, std::vector<u64>& out)
{
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_large(d, out);
    factor_large(n / d, out);
}

// Trial division by 2, 3, 5 and then a mod-30 wheel, up to min(sqrt(n), limit).
u64 trial_divide(u64 n, u64 limit, std::vector<u64>& out)
{
    for (u64 p : {2ULL, 3ULL, 5ULL}) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    static constexpr u64 gaps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 p = 7;
    for (int i = 0; p <= limit && p * p <= n; p += gaps[i], i = (i + 1) % 8) {
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    }
    return n;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    return miller_rabin(n);
}

Factorization factor(std::uint64_t n)
{
    HECKE_REQUIRE(n >= 1, "factor(0) is undefined");
    std::vector<u64> primes;
    constexpr u64 trial_threshold = u64{1} << 31;
    if (n <= trial_threshold) {
        u64 rest = trial_divide(n, trial_threshold, primes);
        if (rest > 1) primes.push_back(rest);
    } else {
        u64 rest = trial_divide(n, u64{1} << 16, primes);
        factor_large(rest, primes);
    }
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (u64 p : primes) {
        if (!f.empty() && f.back().prime == p)
            ++f.back().exponent;
        else
            f.push_back({p, 1});
    }
    return f;
}

std::vector<std::int64_t> divisors(const Factorization& f)
{
    std::vector<std::int64_t> ds{1};
    for (const auto& [p, e] : f) {
        const std::size_t count = ds.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= static_cast<std::int64_t>(p);
            for (std::size_t j = 0; j < count; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<std::int64_t> divisors(std::int64_t n)
{
    HECKE_REQUIRE(n >= 1, "n must be positive");
    return divisors(factor(static_cast<u64>(n)));
}

int mobius(std::int64_t n)
{
    HECKE_REQUIRE(n >= 1, "n must be positive");
    int mu = 1;
    for (const auto& pe : factor(static_cast<u64>(n))) {
        if (pe.exponent > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::int64_t euler_phi(std::int64_t n)
{
    HECKE_REQUIRE(n >= 1, "n must be positive");
    std::int64_t r = n;
    for (const auto& pe : factor(static_cast<u64>(n))) r = r / static_cast<std::int64_t>(pe.prime) * (static_cast<std::int64_t>(pe.prime) - 1);
    return r;
}

std::int64_t phi1(std::int64_t n)
{
    HECKE_REQUIRE(n >= 1, "n must be positive");
    std::int64_t r = n;
    for (const auto& pe : factor(static_cast<u64>(n))) r = r / static_cast<std::int64_t>(pe.prime) * (static_cast<std::int64_t>(pe.prime) + 1);
    return r;
}

std::int64_t sigma1(std::int64_t n)
{
    return sigma1_coprime(n, 1);
}

std::int64_t sigma1_coprime(std::int64_t n, std::int64_t level)
{
    HECKE_REQUIRE(n >= 1 && level >= 1, "arguments must be positive");
    std::int64_t s = 0;
    for (std::int64_t d : divisors(n))
        if (std::gcd(d, level) == 1) s += n / d;
    return s;
}

BigInt sigma(std::int64_t n, unsigned power)
{
    BigInt s = 0;
    for (std::int64_t d : divisors(n)) s += pow_big(d, power);
    return s;
}

BigInt gegenbauer(unsigned w, const BigInt& t, const BigInt& n)
{
    BigInt prev = 1;  // p_0
    if (w == 0) return prev;
    BigInt cur = t;   // p_1
    for (unsigned i = 2; i <= w; ++i) {
        BigInt next = t * cur - n * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Residue crt_solve(std::span<const Residue> congruences)
{
    // Accumulated solution x mod m, extended one congruence at a time.
    std::int64_t x = 0, m = 1;
    for (const auto& [r_in, mi] : congruences) {
        HECKE_REQUIRE(mi >= 1, "moduli must be positive");
        const std::int64_t r = mod_floor(r_in, mi);
        const std::int64_t g = std::gcd(m, mi);
        if (mod_floor(r - x, g) != 0)
            throw crt_incompatible("crt_solve: congruences " + std::to_string(x) + " mod " + std::to_string(m) +
                                   " and " + std::to_string(r) + " mod " + std::to_string(mi) + " conflict");
        // x + m*k = r (mod mi)  =>  (m/g) k = (r-x)/g (mod mi/g)
        const std::int64_t mg = m / g, mig = mi / g;
        std::int64_t k = 0;
        if (mig > 1) {
            mpz_class inv, base(static_cast<long>(mod_floor(mg, mig))), mod(static_cast<long>(mig));
            mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
            k = mul_mod(mod_floor((r - x) / g, mig), inv.get_si(), mig);
        }
        const std::int64_t lcm = m * mig;
        x = mod_floor(x + static_cast<std::int64_t>(static_cast<__int128>(m) * k % lcm), lcm);
        m = lcm;
    }
    return {x, m};
}

int kronecker_symbol(std::int64_t a, std::int64_t n)
{
    HECKE_REQUIRE(n >= 1, "modulus must be positive");
    int result = 1;
    // Strip factors of 2 from n using (a/2).
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        const std::int64_t r8 = mod_floor(a, 8);
        if (r8 == 3 || r8 == 5) result = -result;
    }
    // Jacobi symbol for odd n.
    a = mod_floor(a, n);
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r8 = n % 8;
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int eps4(std::int64_t a)
{
    switch (mod_floor(a, 4)) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
    }
}

std::int64_t isqrt_floor(std::int64_t n)
{
    HECKE_REQUIRE(n >= 0, "negative argument");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<__int128>(r) * r > n) --r;
    while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<std::int64_t> isqrt_exact(std::int64_t n)
{
    if (n < 0) return std::nullopt;
    const std::int64_t r = isqrt_floor(n);
    if (r * r == n) return r;
    return std::nullopt;
}

int valuation(std::int64_t n, std::int64_t p)
{
    HECKE_REQUIRE(n != 0 && p >= 2, "valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    return static_cast<std::int64_t>(static_cast<__int128>(mod_floor(a, m)) * mod_floor(b, m) % m);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t m)
{
    return static_cast<std::int64_t>(powmod_u64(static_cast<u64>(mod_floor(base, m)), exp, static_cast<u64>(m)));
}

BigInt pow_big(std::int64_t base, unsigned exp)
{
    BigInt r;
    BigInt b(static_cast<long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

} // namespace hecke
