// Exact arithmetic in cyclotomic fields Q(zeta_m).

#ifndef HECKE_CYCLOTOMIC_HPP
#define HECKE_CYCLOTOMIC_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hecke/arith.hpp"

namespace hecke {

/// Coefficients of the m-th cyclotomic polynomial, constant term first. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

/// An element of Q(zeta_m), stored in the power basis 1, zeta, ..., zeta^(phi(m)-1)
/// reduced modulo Phi_m. The field index is normalised to m != 2 (mod 4), using
/// Q(zeta_2m) = Q(zeta_m) for odd m, so that each number has one representation per field.
class CyclotomicNumber {
public:
    CyclotomicNumber() = default;
    CyclotomicNumber(const Rational& q);
    CyclotomicNumber(long v) : CyclotomicNumber(Rational(v)) {}

    /// zeta_m^j.
    static CyclotomicNumber root_of_unity(std::int64_t m, std::int64_t j);
    /// sum_j counts[j] zeta_m^j for j in [0, m).
    static CyclotomicNumber from_power_counts(std::int64_t m, std::span<const std::int64_t> counts);
    /// Builds from a power-basis coefficient vector of Q(zeta_m); m must already be normalised.
    static CyclotomicNumber from_coefficients(std::int64_t m, std::vector<Rational> coeffs);

    std::int64_t field() const { return m_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    /// The same number in Q(zeta_target); requires field() | target (after normalisation).
    CyclotomicNumber embed(std::int64_t target) const;
    /// Moves a rational value back into Q.
    CyclotomicNumber simplified() const;

    bool is_zero() const;
    bool is_rational() const;
    /// Integral in Z[zeta_m], i.e. every power-basis coefficient is an integer.
    bool is_integral() const;
    Rational rational_value() const;  ///< throws unless is_rational()

    std::complex<double> to_complex() const;
    std::string to_string() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& q);
    CyclotomicNumber operator-() const;

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& q) { return a *= q; }
    friend CyclotomicNumber operator*(const Rational& q, CyclotomicNumber a) { return a *= q; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const BigInt& z) { return a *= Rational(z); }
    friend CyclotomicNumber operator*(const BigInt& z, CyclotomicNumber a) { return a *= Rational(z); }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

private:
    std::int64_t m_ = 1;
    std::vector<Rational> c_{Rational(0)};

    void reduce_from_cyclic(std::vector<Rational> poly);  // poly has length m_, indices mod m_
    void unify(CyclotomicNumber& other);
};

/// Normalised field index: m / 2 when m = 2 (mod 4), m otherwise.
std::int64_t normalize_field(std::int64_t m);
std::int64_t lcm_field(std::int64_t a, std::int64_t b);

} // namespace hecke

#endif
