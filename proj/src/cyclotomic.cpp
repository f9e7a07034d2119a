#include "hecke/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace hecke {

namespace {

std::vector<std::int64_t> compute_cyclotomic(std::int64_t m)
{
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    std::vector<std::int64_t> poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d : divisors(m)) {
        if (d == m) continue;
        const auto& div = cyclotomic_polynomial(d);
        const std::size_t dd = div.size() - 1;
        std::vector<std::int64_t> quot(poly.size() - dd, 0);
        for (std::size_t i = poly.size() - 1; i + 1 > dd; --i) {
            const std::int64_t coef = poly[i];  // divisor is monic
            quot[i - dd] = coef;
            if (coef == 0) continue;
            for (std::size_t k = 0; k <= dd; ++k) poly[i - dd + k] -= coef * div[k];
            if (i == dd) break;
        }
        poly = std::move(quot);
    }
    return poly;
}

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m)
{
    HECKE_REQUIRE(m >= 1, "field index must be positive");
    static std::mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<const std::vector<std::int64_t>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return *it->second;
    }
    std::vector<std::int64_t> poly;
    if (m == 1)
        poly = {-1, 1};
    else
        poly = compute_cyclotomic(m);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(m, std::make_unique<const std::vector<std::int64_t>>(std::move(poly)));
    return *it->second;
}

std::int64_t normalize_field(std::int64_t m)
{
    HECKE_REQUIRE(m >= 1, "field index must be positive");
    return m % 4 == 2 ? m / 2 : m;
}

std::int64_t lcm_field(std::int64_t a, std::int64_t b)
{
    return normalize_field(std::lcm(a, b));
}

CyclotomicNumber::CyclotomicNumber(const Rational& q) : m_(1), c_{q} {}

void CyclotomicNumber::reduce_from_cyclic(std::vector<Rational> poly)
{
    const auto& phi = cyclotomic_polynomial(m_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > d;) {
        if (sgn(poly[i]) == 0) continue;
        const Rational coef = poly[i];
        for (std::size_t k = 0; k < d; ++k)
            if (phi[k] != 0) poly[i - d + k] -= coef * phi[k];
        poly[i] = 0;
    }
    poly.resize(d);
    c_ = std::move(poly);
}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::int64_t m, std::int64_t j)
{
    const std::int64_t counts_size = m;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(counts_size), 0);
    counts[static_cast<std::size_t>(mod_floor(j, m))] = 1;
    return from_power_counts(m, counts);
}

CyclotomicNumber CyclotomicNumber::from_power_counts(std::int64_t m, std::span<const std::int64_t> counts)
{
    HECKE_REQUIRE(static_cast<std::int64_t>(counts.size()) == m, "need one count per power");
    CyclotomicNumber x;
    x.m_ = normalize_field(m);
    std::vector<Rational> poly(static_cast<std::size_t>(x.m_), Rational(0));
    if (x.m_ == m) {
        for (std::size_t j = 0; j < counts.size(); ++j)
            if (counts[j]) poly[j] += counts[j];
    } else {
        // zeta_{2o}^j = zeta_o^{j/2} for even j and -zeta_o^{(j+o)/2} for odd j.
        const std::int64_t o = x.m_;
        for (std::int64_t j = 0; j < m; ++j) {
            const std::int64_t c = counts[static_cast<std::size_t>(j)];
            if (!c) continue;
            if (j % 2 == 0)
                poly[static_cast<std::size_t>(j / 2)] += c;
            else
                poly[static_cast<std::size_t>(((j + o) / 2) % o)] -= c;
        }
    }
    x.reduce_from_cyclic(std::move(poly));
    return x;
}

CyclotomicNumber CyclotomicNumber::from_coefficients(std::int64_t m, std::vector<Rational> coeffs)
{
    HECKE_REQUIRE(normalize_field(m) == m, "field index must be normalised");
    const auto& phi = cyclotomic_polynomial(m);
    HECKE_REQUIRE(coeffs.size() == phi.size() - 1, "coefficient vector has the wrong length");
    CyclotomicNumber x;
    x.m_ = m;
    x.c_ = std::move(coeffs);
    return x;
}

CyclotomicNumber CyclotomicNumber::embed(std::int64_t target) const
{
    const std::int64_t t = normalize_field(target);
    HECKE_REQUIRE(t % m_ == 0, "cannot embed Q(zeta_" + std::to_string(m_) + ") into Q(zeta_" + std::to_string(target) + ")");
    if (t == m_) return *this;
    const std::int64_t step = t / m_;
    std::vector<Rational> poly(static_cast<std::size_t>(t), Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) poly[j * static_cast<std::size_t>(step)] = c_[j];
    CyclotomicNumber x;
    x.m_ = t;
    x.reduce_from_cyclic(std::move(poly));
    return x;
}

CyclotomicNumber CyclotomicNumber::simplified() const
{
    if (m_ != 1 && is_rational()) return CyclotomicNumber(c_[0]);
    return *this;
}

bool CyclotomicNumber::is_zero() const
{
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const
{
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0) return false;
    return true;
}

bool CyclotomicNumber::is_integral() const
{
    for (const auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const
{
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
    return c_[0];
}

std::complex<double> CyclotomicNumber::to_complex() const
{
    std::complex<double> z = 0;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m_);
        z += c_[j].get_d() * std::polar(1.0, angle);
    }
    return z;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[j].get_str();
        if (j == 1) os << "*z";
        if (j > 1) os << "*z^" << j;
    }
    if (first) os << "0";
    if (m_ > 1) os << " (z = zeta_" << m_ << ")";
    return os.str();
}

void CyclotomicNumber::unify(CyclotomicNumber& other)
{
    if (m_ == other.m_) return;
    const std::int64_t l = lcm_field(m_, other.m_);
    if (m_ != l) *this = embed(l);
    if (other.m_ != l) other = other.embed(l);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o)
{
    if (m_ == o.m_) {
        for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
        return *this;
    }
    CyclotomicNumber other = o;
    unify(other);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += other.c_[j];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o)
{
    return *this += -o;
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber x = *this;
    for (auto& q : x.c_) q = -q;
    return x;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& q)
{
    for (auto& c : c_) c *= q;
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o)
{
    if (o.m_ == 1) return *this *= o.c_[0];
    if (m_ == 1) {
        const Rational q = c_[0];
        *this = o;
        return *this *= q;
    }
    CyclotomicNumber other = o;
    unify(other);
    std::vector<Rational> poly(static_cast<std::size_t>(m_), Rational(0));
    const std::size_t mm = static_cast<std::size_t>(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (std::size_t j = 0; j < other.c_.size(); ++j) {
            if (sgn(other.c_[j]) == 0) continue;
            poly[(i + j) % mm] += c_[i] * other.c_[j];
        }
    }
    reduce_from_cyclic(std::move(poly));
    return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    if (a.m_ == b.m_) return a.c_ == b.c_;
    CyclotomicNumber x = a, y = b;
    x.unify(y);
    return x.c_ == y.c_;
}

} // namespace hecke
