// Dirichlet characters modulo N with exact cyclotomic values.
//
// Generator convention: (Z/NZ)^x is split by CRT over the prime powers of N in
// increasing order of p. An odd p^a contributes the smallest positive primitive
// root mod p^a; 4 contributes -1; 2^a with a >= 3 contributes -1 and then 5.
// Each generator is lifted to the residue mod N that is 1 modulo the other
// prime powers. Characters are enumerated by mixed radix over their exponent
// vectors with the first generator varying fastest, so index 0 is trivial.

#ifndef HECKE_CHARACTERS_HPP
#define HECKE_CHARACTERS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/conventions.hpp"
#include "hecke/cyclotomic.hpp"

namespace hecke {

struct CyclicFactor {
    std::int64_t generator;    ///< residue mod N
    std::int64_t order;
    std::int64_t prime;        ///< prime whose unit group this factor belongs to
    std::int64_t prime_power;  ///< p^a exactly dividing N
};

class UnitGroup {
public:
    explicit UnitGroup(std::int64_t modulus);

    /// Shared, immutable instance per modulus.
    static std::shared_ptr<const UnitGroup> get(std::int64_t modulus);

    std::int64_t modulus() const { return modulus_; }
    std::span<const CyclicFactor> factors() const { return factors_; }
    /// Order of the group, phi(N).
    std::int64_t order() const { return order_; }
    /// Lcm of the cyclic orders.
    std::int64_t exponent() const { return exponent_; }

    /// Exponent vector of a on the generators, or nullopt when gcd(a, N) > 1.
    std::optional<std::span<const std::int32_t>> log(std::int64_t a) const;

private:
    std::int64_t modulus_;
    std::int64_t order_ = 1;
    std::int64_t exponent_ = 1;
    std::vector<CyclicFactor> factors_;
    std::vector<std::int32_t> logs_;  // modulus_ rows of factors_.size() entries
    std::vector<bool> is_unit_;
};

std::int64_t primitive_root_prime_power(std::int64_t p, int a);

class DirichletCharacter {
public:
    /// Trivial character mod N.
    explicit DirichletCharacter(std::int64_t modulus);
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents);

    std::int64_t modulus() const { return group_->modulus(); }
    const UnitGroup& group() const { return *group_; }
    std::span<const std::int64_t> exponents() const { return exponents_; }
    /// Multiplicative order; values live in Q(zeta_order).
    std::int64_t order() const { return order_; }
    std::int64_t conductor() const { return conductor_; }
    /// chi(-1).
    int parity() const { return parity_; }
    bool is_trivial() const { return order_ == 1; }
    /// Position in the enumeration order of enumerate_characters.
    std::int64_t index() const;

    /// chi(a) = zeta_order^angle, or nullopt when gcd(a, N) > 1.
    std::optional<std::int64_t> angle(std::int64_t a) const;
    CyclotomicNumber eval(std::int64_t a) const;

    /// The primitive character inducing chi, read modulo M (conductor | M | N), at a.
    std::optional<std::int64_t> angle_mod_divisor(std::int64_t a, std::int64_t M) const;
    CyclotomicNumber eval_mod_divisor(std::int64_t a, std::int64_t M) const;
    /// Dispatches on the residue-evaluation convention.
    std::optional<std::int64_t> angle_of_residue(std::int64_t a, std::int64_t M, ResidueEvaluation how) const;

    /// The component modulo an exact divisor M of N (gcd(M, N/M) = 1): a -> chi(x), x = a mod M, x = 1 mod N/M.
    DirichletCharacter component(std::int64_t M) const;

    bool operator==(const DirichletCharacter& o) const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::int64_t> exponents_;
    std::vector<std::int64_t> steps_;  // angle contributed by one unit of each generator
    std::int64_t order_ = 1;
    std::int64_t conductor_ = 1;
    int parity_ = 1;

    void init();
};

/// All phi(N) characters mod N in enumeration order; optionally only those with chi(-1) = parity.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t modulus, std::optional<int> parity = std::nullopt);
DirichletCharacter character_by_index(std::int64_t modulus, std::int64_t index);

/// Smallest c | N such that chi is trivial on units = 1 mod c, by exhaustive search.
std::int64_t conductor_brute_force(const DirichletCharacter& chi);

} // namespace hecke

#endif
