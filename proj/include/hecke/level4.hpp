// Explicit trace formulas at level 4, trace forms, and the H(4D) relations.

#ifndef HECKE_LEVEL4_HPP
#define HECKE_LEVEL4_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hecke/arith.hpp"
#include "hecke/conventions.hpp"
#include "hecke/cyclotomic.hpp"
#include "hecke/qexpansion.hpp"

namespace hecke {

/// tr(T_n, S_k(4)), n odd, k even.
BigInt trace4_even_weight_odd_n(int k, std::int64_t n, const Conventions& conv = {});
/// tr(T_n, S_k(4, chi_4)), n odd, k odd.
BigInt trace4_odd_weight_odd_n(int k, std::int64_t n, const Conventions& conv = {});
/// tr(T_n, S_k(4, chi)), n even, chi the character mod 4 of parity (-1)^k.
BigInt trace4_even_n(int k, std::int64_t n, const Conventions& conv = {});

enum class ParityFilter { all, odd, even };

struct GroupSpec {
    enum class Kind { gamma0, gamma1 };
    Kind kind = Kind::gamma0;
    std::int64_t level = 1;
    /// Character index for Gamma_0 (enumeration order of enumerate_characters); 0 is trivial.
    std::int64_t chi_index = 0;
};

/// a_n = tr(T_n) on the cusp space for 1 <= n <= P (a_0 = 0); the filter zeroes the other parity.
/// Note the sign: the coefficients are +tr(T_n).
QExpansion<CyclotomicNumber> trace_form(const GroupSpec& group, int k, std::int64_t precision,
                                        ParityFilter filter = ParityFilter::all, const Conventions& conv = {});

struct RelationFailure {
    std::int64_t D;
    Rational lhs, rhs;
};

struct RelationReport {
    std::int64_t checked = 0;
    std::optional<RelationFailure> first_failure;
    bool ok() const { return !first_failure; }
};

/// H(4D) = 4H(D) for D = 3 mod 8, 2H(D) for D = 7 mod 8, 3H(D) - 2H(D/4) for D = 0 mod 4.
RelationReport relation_table_check(std::int64_t d_max);

} // namespace hecke

#endif
