// Class numbers of positive definite binary quadratic forms, extended to all
// integers: Hurwitz H(D), primitive h(D), unit counts w(D) and h0(D).

#ifndef HECKE_CLASS_NUMBERS_HPP
#define HECKE_CLASS_NUMBERS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/conventions.hpp"

namespace hecke {

struct QuadraticForm {
    std::int64_t a, b, c;

    std::int64_t discriminant() const { return b * b - 4 * a * c; }
    bool is_primitive() const;
    bool operator==(const QuadraticForm&) const = default;
};

/// Reduced positive definite forms of discriminant disc < 0 (imprimitive ones included),
/// ordered by (a, b). Reduced means |b| <= a <= c with b >= 0 whenever |b| = a or a = c.
std::vector<QuadraticForm> reduced_forms(std::int64_t disc);

/// Number of primitive reduced forms of discriminant disc < 0.
std::int64_t class_number_h(std::int64_t disc);
/// Units of the order of discriminant disc < 0: 6, 4 or 2.
int units_w(std::int64_t disc);

bool is_negative_discriminant(std::int64_t disc);

/// Extended Hurwitz class number; total on Z.
Rational hurwitz_H(std::int64_t D, const Conventions& conv = {});
/// Extended h0(D) = 2h(D)/w(D); total on Z.
Rational h0(std::int64_t D);

/// Weighted count of reduced forms of discriminant -D for D > 0: forms proportional
/// to x^2+xy+y^2 weigh 1/3, to x^2+y^2 weigh 1/2. Independent of hurwitz_H.
Rational hurwitz_weighted_count(std::int64_t D);

/// Memo of H over the default conventions. Safe for concurrent use.
class HurwitzTable {
public:
    Rational get(std::int64_t D);
    std::size_t size() const;

    static HurwitzTable& global();

private:
    mutable std::shared_mutex mutex_;
    std::map<std::int64_t, Rational> values_;
};

/// Uncached computation of H at the default conventions.
Rational hurwitz_H_uncached(std::int64_t D);

struct InversionFailure {
    std::int64_t D;
    Rational lhs, rhs;
    int identity;  ///< 1: H(-D) = sum h0(D/d^2); 2: h0(-D) = sum mu(d) H(D/d^2)
};

struct InversionReport {
    std::int64_t checked = 0;
    std::optional<InversionFailure> first_failure;
    bool ok() const { return !first_failure; }
};

/// Both Moebius relations between H and h0 for every |D| <= d_max.
InversionReport check_inversion(std::int64_t d_max);

/// Sum over all integers t of H(4n - t^2). The support is |t| <= 2 sqrt(n) together with the
/// t where t^2 - 4n is a nonzero square, found from factor pairs of 4n.
Rational kronecker_hurwitz_sum(std::int64_t n, const Conventions& conv = {});
bool kronecker_hurwitz_check(std::int64_t n, const Conventions& conv = {});

/// Values t > 2 sqrt(n) with t^2 - 4n a positive perfect square (positive t only).
std::vector<std::int64_t> square_defect_traces(std::int64_t n);

} // namespace hecke

#endif
