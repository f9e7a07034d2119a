// Switches for the few places where the trace formulas admit more than one
// reading. Defaults are the conventions the engines are validated against;
// the alternatives exist so the cross-check suites can be shown to detect them.

#ifndef HECKE_CONVENTIONS_HPP
#define HECKE_CONVENTIONS_HPP

namespace hecke {

/// How chi(alpha) is read when alpha is only known modulo a divisor M of N.
enum class ResidueEvaluation {
    /// Evaluate the primitive character underlying chi on alpha mod M (zero when gcd(alpha, M) > 1).
    induced_primitive,
    /// Evaluate chi itself at the least non-negative representative of alpha mod M, and keep
    /// every split N = rs with (r, s) | a - d, ignoring the conductor condition.
    naive_representative,
};

struct Conventions {
    /// H(-u^2) = sign * u / 2 for u > 0.
    int negative_square_sign = -1;
    ResidueEvaluation residue_evaluation = ResidueEvaluation::induced_primitive;
    /// Evaluate the t^2 = 4n boundary by the class-number sum with H(0) instead of the closed form.
    bool boundary_via_class_numbers = false;

    bool is_default() const
    {
        return negative_square_sign == -1 && residue_evaluation == ResidueEvaluation::induced_primitive;
    }
};

} // namespace hecke

#endif
