// Truncated q-expansions with exact coefficients.

#ifndef HECKE_QEXPANSION_HPP
#define HECKE_QEXPANSION_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hecke/arith.hpp"

namespace hecke {

/// sum_{j=0}^{P} coeffs[j] q^j, known exactly up to q^P.
template <class T>
struct QExpansion {
    std::string label;
    std::vector<T> coeffs;

    QExpansion() = default;
    QExpansion(std::string label, std::int64_t precision)
        : label(std::move(label)), coeffs(static_cast<std::size_t>(precision) + 1, T(0))
    {
    }

    std::int64_t precision() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }
    const T& operator[](std::int64_t j) const { return coeffs[static_cast<std::size_t>(j)]; }
    T& operator[](std::int64_t j) { return coeffs[static_cast<std::size_t>(j)]; }

    QExpansion& operator+=(const QExpansion& o)
    {
        truncate(o.precision());
        for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] += o.coeffs[j];
        return *this;
    }

    template <class S>
    QExpansion& scale(const S& c)
    {
        for (auto& a : coeffs) a = a * c;
        return *this;
    }

    void truncate(std::int64_t p)
    {
        if (p < precision()) coeffs.resize(static_cast<std::size_t>(p) + 1);
    }

    /// Product truncated at the smaller precision.
    friend QExpansion operator*(const QExpansion& f, const QExpansion& g)
    {
        const std::int64_t p = std::min(f.precision(), g.precision());
        QExpansion h(f.label + "*" + g.label, p);
        for (std::int64_t i = 0; i <= p; ++i) {
            if (f[i] == T(0)) continue;
            for (std::int64_t j = 0; i + j <= p; ++j) h[i + j] += f[i] * g[j];
        }
        return h;
    }
};

} // namespace hecke

#endif
