#include "hecke/class_numbers.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace hecke {

bool QuadraticForm::is_primitive() const
{
    return std::gcd(std::gcd(a, b), c) == 1;
}

bool is_negative_discriminant(std::int64_t disc)
{
    if (disc >= 0) return false;
    const std::int64_t r = mod_floor(disc, 4);
    return r == 0 || r == 1;
}

std::vector<QuadraticForm> reduced_forms(std::int64_t disc)
{
    HECKE_REQUIRE(is_negative_discriminant(disc), "discriminant must be negative and 0 or 1 mod 4");
    std::vector<QuadraticForm> forms;
    const std::int64_t abs_disc = -disc;
    for (std::int64_t a = 1; 3 * a * a <= abs_disc; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            if (mod_floor(b - disc, 2) != 0) continue;
            const std::int64_t num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            const std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

std::int64_t class_number_h(std::int64_t disc)
{
    std::int64_t h = 0;
    for (const auto& f : reduced_forms(disc))
        if (f.is_primitive()) ++h;
    return h;
}

int units_w(std::int64_t disc)
{
    HECKE_REQUIRE(is_negative_discriminant(disc), "discriminant must be negative and 0 or 1 mod 4");
    if (disc == -3) return 6;
    if (disc == -4) return 4;
    return 2;
}

Rational h0(std::int64_t D)
{
    if (D == 0) return Rational(-1, 12);
    if (D > 0) {
        if (auto u = isqrt_exact(D)) return make_rational(-euler_phi(*u), 2);
        return 0;
    }
    if (!is_negative_discriminant(D)) return 0;
    return make_rational(2 * class_number_h(D), units_w(D));
}

Rational hurwitz_H_uncached(std::int64_t D)
{
    if (D == 0) return Rational(-1, 12);
    if (D < 0) {
        if (auto u = isqrt_exact(-D)) return make_rational(-*u, 2);
        return 0;
    }
    const std::int64_t r = D % 4;
    if (r == 1 || r == 2) return 0;
    // Sum of h0 over the orders containing the order of discriminant -D.
    Rational total = 0;
    for (std::int64_t f = 1; f * f <= D; ++f) {
        if (D % (f * f) != 0) continue;
        total += h0(-(D / (f * f)));
    }
    return total;
}

HurwitzTable& HurwitzTable::global()
{
    static HurwitzTable table;
    return table;
}

Rational HurwitzTable::get(std::int64_t D)
{
    {
        std::shared_lock lock(mutex_);
        if (auto it = values_.find(D); it != values_.end()) return it->second;
    }
    Rational v = hurwitz_H_uncached(D);
    std::unique_lock lock(mutex_);
    return values_.try_emplace(D, std::move(v)).first->second;
}

std::size_t HurwitzTable::size() const
{
    std::shared_lock lock(mutex_);
    return values_.size();
}

Rational hurwitz_H(std::int64_t D, const Conventions& conv)
{
    if (D < 0 && conv.negative_square_sign != -1) {
        if (auto u = isqrt_exact(-D)) return make_rational(conv.negative_square_sign * *u, 2);
        return 0;
    }
    return HurwitzTable::global().get(D);
}

Rational hurwitz_weighted_count(std::int64_t D)
{
    HECKE_REQUIRE(D > 0, "D must be positive");
    if (D % 4 == 1 || D % 4 == 2) return 0;
    Rational total = 0;
    for (const auto& f : reduced_forms(-D)) {
        if (f.a == f.b && f.b == f.c)
            total += Rational(1, 3);
        else if (f.b == 0 && f.a == f.c)
            total += Rational(1, 2);
        else
            total += 1;
    }
    return total;
}

InversionReport check_inversion(std::int64_t d_max)
{
    HECKE_REQUIRE(d_max >= 1, "d_max must be positive");
    InversionReport report;
    for (std::int64_t D = -d_max; D <= d_max; ++D) {
        ++report.checked;
        Rational sum_h0 = 0, sum_H = 0;
        if (D == 0) {
            sum_h0 = h0(0);
            sum_H = hurwitz_H(0);
        } else {
            const std::int64_t absD = D < 0 ? -D : D;
            for (std::int64_t d = 1; d * d <= absD; ++d) {
                if (D % (d * d) != 0) continue;
                sum_h0 += h0(D / (d * d));
                sum_H += hurwitz_H(D / (d * d)) * mobius(d);
            }
        }
        if (Rational lhs = hurwitz_H(-D); lhs != sum_h0) {
            report.first_failure = InversionFailure{D, lhs, sum_h0, 1};
            return report;
        }
        if (Rational lhs = h0(-D); lhs != sum_H) {
            report.first_failure = InversionFailure{D, lhs, sum_H, 2};
            return report;
        }
    }
    return report;
}

std::vector<std::int64_t> square_defect_traces(std::int64_t n)
{
    HECKE_REQUIRE(n >= 1, "n must be positive");
    std::vector<std::int64_t> ts;
    const std::int64_t m = 4 * n;
    for (std::int64_t e : divisors(m)) {
        const std::int64_t f = m / e;
        if (e >= f || (e - f) % 2 != 0) continue;
        ts.push_back((e + f) / 2);
    }
    std::sort(ts.begin(), ts.end());
    return ts;
}

Rational kronecker_hurwitz_sum(std::int64_t n, const Conventions& conv)
{
    Rational total = 0;
    const std::int64_t bound = isqrt_floor(4 * n);
    for (std::int64_t t = -bound; t <= bound; ++t) total += hurwitz_H(4 * n - t * t, conv);
    for (std::int64_t t : square_defect_traces(n)) total += 2 * hurwitz_H(4 * n - t * t, conv);
    return total;
}

bool kronecker_hurwitz_check(std::int64_t n, const Conventions& conv)
{
    return kronecker_hurwitz_sum(n, conv) == sigma1(n);
}

} // namespace hecke
