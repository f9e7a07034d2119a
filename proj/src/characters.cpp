#include "hecke/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace hecke {

std::int64_t primitive_root_prime_power(std::int64_t p, int a)
{
    HECKE_REQUIRE(p > 2 && a >= 1 && is_prime(static_cast<std::uint64_t>(p)), "odd prime power expected");
    const auto qs = factor(static_cast<std::uint64_t>(p - 1));
    const std::int64_t p2 = p * p;
    for (std::int64_t g = 2;; ++g) {
        if (g % p == 0) continue;
        bool primitive = true;
        for (const auto& q : qs) {
            if (pow_mod(g, static_cast<std::uint64_t>((p - 1) / static_cast<std::int64_t>(q.prime)), p) == 1) {
                primitive = false;
                break;
            }
        }
        if (!primitive) continue;
        // A primitive root mod p generates mod every p^a unless g^(p-1) = 1 mod p^2.
        if (a >= 2 && pow_mod(g, static_cast<std::uint64_t>(p - 1), p2) == 1) continue;
        return g;
    }
}

UnitGroup::UnitGroup(std::int64_t modulus) : modulus_(modulus)
{
    HECKE_REQUIRE(modulus >= 1, "modulus must be positive");
    for (const auto& [pu, a] : factor(static_cast<std::uint64_t>(modulus))) {
        const auto p = static_cast<std::int64_t>(pu);
        std::int64_t pp = 1;
        for (int i = 0; i < a; ++i) pp *= p;
        auto lift = [&](std::int64_t g) {
            const Residue parts[] = {{mod_floor(g, pp), pp}, {1, modulus / pp}};
            return crt_solve(parts).value;
        };
        if (p == 2) {
            if (a >= 2) factors_.push_back({lift(-1), 2, 2, pp});
            if (a >= 3) factors_.push_back({lift(5), pp / 4, 2, pp});
        } else {
            factors_.push_back({lift(primitive_root_prime_power(p, a)), pp / p * (p - 1), p, pp});
        }
    }
    for (const auto& f : factors_) {
        order_ *= f.order;
        exponent_ = std::lcm(exponent_, f.order);
    }

    const std::size_t width = factors_.size();
    logs_.assign(static_cast<std::size_t>(modulus_) * width, 0);
    is_unit_.assign(static_cast<std::size_t>(modulus_), false);
    std::vector<std::int32_t> digits(width, 0);
    for (std::int64_t idx = 0; idx < order_; ++idx) {
        std::int64_t x = 1 % modulus_;
        for (std::size_t i = 0; i < width; ++i)
            x = mul_mod(x, pow_mod(factors_[i].generator, static_cast<std::uint64_t>(digits[i]), modulus_), modulus_);
        is_unit_[static_cast<std::size_t>(x)] = true;
        std::copy(digits.begin(), digits.end(), logs_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(x) * width));
        for (std::size_t i = 0; i < width; ++i) {
            if (++digits[i] < factors_[i].order) break;
            digits[i] = 0;
        }
    }
}

std::shared_ptr<const UnitGroup> UnitGroup::get(std::int64_t modulus)
{
    static std::mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const UnitGroup>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(modulus); it != cache.end()) return it->second;
    }
    auto group = std::make_shared<const UnitGroup>(modulus);
    std::lock_guard lock(mutex);
    return cache.try_emplace(modulus, std::move(group)).first->second;
}

std::optional<std::span<const std::int32_t>> UnitGroup::log(std::int64_t a) const
{
    const auto r = static_cast<std::size_t>(mod_floor(a, modulus_));
    if (!is_unit_[r]) return std::nullopt;
    const std::size_t width = factors_.size();
    return std::span<const std::int32_t>(logs_.data() + r * width, width);
}

DirichletCharacter::DirichletCharacter(std::int64_t modulus)
    : group_(UnitGroup::get(modulus)), exponents_(group_->factors().size(), 0)
{
    init();
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents))
{
    HECKE_REQUIRE(exponents_.size() == group_->factors().size(), "one exponent per generator");
    init();
}

void DirichletCharacter::init()
{
    const auto factors = group_->factors();
    order_ = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        exponents_[i] = mod_floor(exponents_[i], factors[i].order);
        order_ = std::lcm(order_, factors[i].order / std::gcd(exponents_[i], factors[i].order));
    }
    steps_.resize(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const std::int64_t g = std::gcd(exponents_[i], factors[i].order);
        const std::int64_t local_order = factors[i].order / g;
        steps_[i] = (exponents_[i] / g) * (order_ / local_order);
    }

    parity_ = 1;
    if (auto a = angle(-1); a && *a != 0) parity_ = -1;

    // Conductor, one prime at a time. For 2^a the factors are -1 and (when a >= 3) 5.
    conductor_ = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        const std::int64_t local_order = f.order / std::gcd(exponents_[i], f.order);
        if (f.prime != 2) {
            if (local_order == 1) continue;
            std::int64_t c = f.prime;
            for (std::int64_t o = local_order; o % f.prime == 0; o /= f.prime) c *= f.prime;
            conductor_ *= c;
            continue;
        }
        std::int64_t five_order = 1;
        if (i + 1 < factors.size() && factors[i + 1].prime == 2) {
            const auto& five = factors[i + 1];
            five_order = five.order / std::gcd(exponents_[i + 1], five.order);
            ++i;
        }
        if (five_order > 1)
            conductor_ *= 4 * five_order;
        else if (local_order > 1)
            conductor_ *= 4;
    }
}

std::int64_t DirichletCharacter::index() const
{
    std::int64_t idx = 0, radix = 1;
    const auto factors = group_->factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        idx += exponents_[i] * radix;
        radix *= factors[i].order;
    }
    return idx;
}

std::optional<std::int64_t> DirichletCharacter::angle(std::int64_t a) const
{
    auto lg = group_->log(a);
    if (!lg) return std::nullopt;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) s = (s + static_cast<std::int64_t>((*lg)[i]) * steps_[i]) % order_;
    return s;
}

CyclotomicNumber DirichletCharacter::eval(std::int64_t a) const
{
    auto ang = angle(a);
    if (!ang) return CyclotomicNumber();
    return CyclotomicNumber::root_of_unity(order_, *ang);
}

std::optional<std::int64_t> DirichletCharacter::angle_mod_divisor(std::int64_t a, std::int64_t M) const
{
    const std::int64_t N = modulus();
    HECKE_REQUIRE(M >= 1 && N % M == 0, "M must divide the modulus");
    HECKE_REQUIRE(M % conductor_ == 0, "the conductor must divide M");
    const std::int64_t r = mod_floor(a, M);
    if (std::gcd(r, M) != 1) return std::nullopt;
    // Any lift of r to a unit mod N sees the same value, as chi factors through M.
    for (std::int64_t x = r;; x += M)
        if (std::gcd(x, N) == 1) return angle(x);
}

CyclotomicNumber DirichletCharacter::eval_mod_divisor(std::int64_t a, std::int64_t M) const
{
    auto ang = angle_mod_divisor(a, M);
    if (!ang) return CyclotomicNumber();
    return CyclotomicNumber::root_of_unity(order_, *ang);
}

std::optional<std::int64_t> DirichletCharacter::angle_of_residue(std::int64_t a, std::int64_t M, ResidueEvaluation how) const
{
    if (how == ResidueEvaluation::naive_representative) return angle(mod_floor(a, M));
    return angle_mod_divisor(a, M);
}

DirichletCharacter DirichletCharacter::component(std::int64_t M) const
{
    const std::int64_t N = modulus();
    HECKE_REQUIRE(M >= 1 && N % M == 0 && std::gcd(M, N / M) == 1, "M must be an exact divisor of the modulus");
    auto sub = UnitGroup::get(M);
    std::vector<std::int64_t> exps;
    for (const auto& f : sub->factors()) {
        const Residue parts[] = {{f.generator, M}, {1, N / M}};
        const std::int64_t x = crt_solve(parts).value;
        const std::int64_t ang = *angle(x);
        // ang / order_ = e / f.order (mod 1)
        exps.push_back(ang * f.order / order_);
    }
    return DirichletCharacter(std::move(sub), std::move(exps));
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const
{
    return modulus() == o.modulus() && exponents_ == o.exponents_;
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t modulus, std::optional<int> parity)
{
    auto group = UnitGroup::get(modulus);
    std::vector<DirichletCharacter> chars;
    chars.reserve(static_cast<std::size_t>(group->order()));
    for (std::int64_t idx = 0; idx < group->order(); ++idx) {
        DirichletCharacter chi = character_by_index(modulus, idx);
        if (!parity || chi.parity() == *parity) chars.push_back(std::move(chi));
    }
    return chars;
}

DirichletCharacter character_by_index(std::int64_t modulus, std::int64_t index)
{
    auto group = UnitGroup::get(modulus);
    HECKE_REQUIRE(index >= 0 && index < group->order(), "character index out of range");
    std::vector<std::int64_t> exps;
    for (const auto& f : group->factors()) {
        exps.push_back(index % f.order);
        index /= f.order;
    }
    return DirichletCharacter(std::move(group), std::move(exps));
}

std::int64_t conductor_brute_force(const DirichletCharacter& chi)
{
    const std::int64_t N = chi.modulus();
    for (std::int64_t c : divisors(N)) {
        bool trivial = true;
        for (std::int64_t a = 1; a <= N && trivial; a += c) {
            if (std::gcd(a, N) != 1) continue;
            if (*chi.angle(a) != 0) trivial = false;
        }
        if (trivial) return c;
    }
    return N;
}

} // namespace hecke
