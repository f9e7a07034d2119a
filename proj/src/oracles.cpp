#include "hecke/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "hecke/atkin_lehner.hpp"
#include "hecke/characters.hpp"
#include "hecke/class_numbers.hpp"
#include "hecke/gamma0_trace.hpp"
#include "hecke/gamma1_trace.hpp"
#include "hecke/level4.hpp"

namespace hecke {

QExpansion<BigInt> delta_qexp(std::int64_t precision)
{
    HECKE_REQUIRE(precision >= 1, "precision must be positive");
    const std::int64_t p = precision - 1;
    QExpansion<BigInt> eta("eta", p);
    eta[0] = 1;
    for (std::int64_t m = 1; m <= p; ++m)
        for (std::int64_t j = p; j >= m; --j) eta[j] -= eta[j - m];
    auto e2 = eta * eta;
    auto e4 = e2 * e2;
    auto e8 = e4 * e4;
    auto e24 = e8 * e8 * e8;
    QExpansion<BigInt> delta("Delta", precision);
    for (std::int64_t j = 0; j <= p; ++j) delta[j + 1] = e24[j];
    return delta;
}

Rational bernoulli(unsigned m)
{
    std::vector<Rational> B(m + 1);
    B[0] = 1;
    for (unsigned j = 1; j <= m; ++j) {
        BigInt binom = 1;  // C(j+1, i)
        Rational s = 0;
        for (unsigned i = 0; i < j; ++i) {
            s += binom * B[i];
            binom = binom * (j + 1 - i) / (i + 1);
        }
        B[j] = -s / (j + 1);
    }
    return B[m];
}

QExpansion<Rational> eisenstein(int k, std::int64_t precision)
{
    HECKE_REQUIRE(k >= 4 && k % 2 == 0, "weight must be even and at least 4");
    const Rational c = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
    QExpansion<Rational> e("E" + std::to_string(k), precision);
    e[0] = 1;
    for (std::int64_t n = 1; n <= precision; ++n) e[n] = c * sigma(n, static_cast<unsigned>(k - 1));
    return e;
}

QExpansion<Rational> level1_eigen_traces(int k, std::int64_t precision)
{
    static const int allowed[] = {12, 16, 18, 20, 22, 26};
    HECKE_REQUIRE(std::find(std::begin(allowed), std::end(allowed), k) != std::end(allowed),
                  "S_k(SL_2(Z)) must be one-dimensional: k in {12, 16, 18, 20, 22, 26}");
    const auto delta = delta_qexp(precision);
    QExpansion<Rational> f("Delta", precision);
    for (std::int64_t j = 0; j <= precision; ++j) f[j] = Rational(delta[j]);
    if (k == 12) return f;
    auto g = f * eisenstein(k - 12, precision);
    g.label = "Delta*E" + std::to_string(k - 12);
    return g;
}

std::int64_t genus_X0(std::int64_t N)
{
    HECKE_REQUIRE(N >= 1, "level must be positive");
    const auto f = factor(static_cast<std::uint64_t>(N));
    std::int64_t nu2 = N % 4 == 0 ? 0 : 1;
    std::int64_t nu3 = N % 9 == 0 ? 0 : 1;
    for (const auto& pp : f) {
        const auto p = static_cast<std::int64_t>(pp.prime);
        nu2 *= 1 + kronecker_symbol(-4, p);
        nu3 *= 1 + kronecker_symbol(-3, p);
    }
    std::int64_t cusps = 0;
    for (std::int64_t d : divisors(N)) cusps += euler_phi(std::gcd(d, N / d));
    const Rational g = 1 + make_rational(phi1(N), 12) - make_rational(nu2, 4) - make_rational(nu3, 3) - make_rational(cusps, 2);
    HECKE_REQUIRE(g.get_den() == 1, "genus formula produced a fraction");
    return g.get_num().get_si();
}

void OracleReport::merge(OracleReport other)
{
    cases += other.cases;
    for (auto& f : other.failures) failures.push_back(std::move(f));
}

namespace {

// Runs count jobs on the hardware threads; each job writes only its own slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job)
{
    const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) job(i);
        });
}

struct Case {
    std::string key;
    std::function<std::pair<std::string, std::string>()> run;  // (expected, actual)
};

OracleReport run_cases(const std::string& suite, std::vector<Case> cases)
{
    std::vector<std::optional<OracleFailure>> results(cases.size());
    parallel_for(cases.size(), [&](std::size_t i) {
        try {
            auto [expected, actual] = cases[i].run();
            if (expected != actual) results[i] = OracleFailure{cases[i].key, expected, actual};
        } catch (const std::exception& e) {
            results[i] = OracleFailure{cases[i].key, "a value", std::string("exception: ") + e.what()};
        }
    });
    OracleReport report{suite, static_cast<std::int64_t>(cases.size()), {}};
    for (auto& r : results)
        if (r) report.failures.push_back(std::move(*r));
    return report;
}

std::string str(const CyclotomicNumber& x) { return x.simplified().to_string(); }
std::string str(const Rational& q) { return to_string(q); }

OracleReport atkin_lehner_suite(const SuiteBounds& b, const Conventions& conv)
{
    std::vector<Case> cases;
    for (std::int64_t N = 1; N <= b.al_level_max; ++N)
        for (int k = 2; k <= std::min(b.weight_max, 6); k += 2)
            for (std::int64_t n = 1; n <= b.index_max; ++n)
                cases.push_back({"l=1 " + TraceQuery(N, k, n).key(), [=] {
                                     return std::pair{str(trace_S(TraceQuery(N, k, n), conv).value),
                                                      str(trace_Tn_Wl(ALQuery(N, 1, k, n), conv).value)};
                                 }});
    // W_l is an involution on S_2(N), so its trace is bounded by and congruent to the genus.
    for (std::int64_t N = 1; N <= b.al_level_max; ++N)
        for (std::int64_t ell : divisors(N)) {
            if (std::gcd(ell, N / ell) != 1) continue;
            cases.push_back({"involution N=" + std::to_string(N) + ",l=" + std::to_string(ell), [=] {
                                 const Rational t = trace_Tn_Wl(ALQuery(N, ell, 2, 1), conv).value.rational_value();
                                 const std::int64_t g = genus_X0(N);
                                 const bool ok = abs(t) <= g && (t.get_num() - g) % 2 == 0;
                                 return std::pair{std::string("|tr| <= ") + std::to_string(g) + " with same parity",
                                                  ok ? std::string("|tr| <= ") + std::to_string(g) + " with same parity"
                                                     : "tr = " + to_string(t)};
                             }});
        }
    return run_cases("atkin-lehner", std::move(cases));
}

OracleReport character_sum_suite(const SuiteBounds& b, const Conventions& conv)
{
    std::vector<Case> cases;
    for (std::int64_t N = 1; N <= b.level_max; ++N)
        for (int k = 2; k <= std::min(b.weight_max, 6); ++k)
            for (std::int64_t n = 1; n <= b.index_max; ++n) {
                const std::string key = Gamma1Query(N, k, n).key();
                cases.push_back({"S " + key, [=] {
                                     CyclotomicNumber sum;
                                     for (const auto& chi : enumerate_characters(N))
                                         sum += trace_S(TraceQuery(N, k, chi, n), conv).value;
                                     return std::pair{str(trace_gamma1_S(Gamma1Query(N, k, n), conv).value), str(sum)};
                                 }});
                cases.push_back({"MS " + key, [=] {
                                     CyclotomicNumber sum;
                                     for (const auto& chi : enumerate_characters(N))
                                         sum += trace_M_plus_S(TraceQuery(N, k, chi, n), conv).value;
                                     return std::pair{str(trace_gamma1_MS(Gamma1Query(N, k, n), conv).value), str(sum)};
                                 }});
            }
    return run_cases("character-sum", std::move(cases));
}

OracleReport closed_forms_suite(const SuiteBounds& b, const Conventions& conv)
{
    std::vector<Case> cases;
    for (std::int64_t n = 2; n <= std::min<std::int64_t>(b.index_max, 8); ++n)
        for (int k : {2, 3, 4, 6}) {
            if (k > b.weight_max) continue;
            for (std::int64_t N = 2 * n + 3; N <= b.c1_level_max; ++N) {
                const Gamma1Query q(N, k, n);
                cases.push_back({"MS " + q.key(), [=] {
                                     return std::pair{str(cor_c1_MS(q)), str(trace_gamma1_MS(q, conv).value)};
                                 }});
                cases.push_back({"S " + q.key(), [=] {
                                     return std::pair{str(cor_c1_S(q)), str(trace_gamma1_S(q, conv).value)};
                                 }});
                if (k > 2 && std::gcd(N, n - 1) == 1)
                    cases.push_back({"ratio " + q.key(), [=] {
                                         const Rational ratio = trace_gamma1_S(q, conv).value / euler_phi(N);
                                         return std::pair{str(Rational(-1, 2)), str(ratio)};
                                     }});
            }
        }
    return run_cases("closed-forms", std::move(cases));
}

OracleReport level4_suite(const SuiteBounds& b, const Conventions& conv)
{
    std::vector<Case> cases;
    for (int k = 2; k <= b.weight_max; ++k)
        for (std::int64_t n = 1; n <= b.level4_index_max; ++n) {
            const std::string key = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
            cases.push_back({"level 4 " + key, [=] {
                                 const DirichletCharacter chi = character_by_index(4, k % 2);
                                 BigInt explicit_value;
                                 if (n % 2 == 0)
                                     explicit_value = trace4_even_n(k, n, conv);
                                 else if (k % 2 == 0)
                                     explicit_value = trace4_even_weight_odd_n(k, n, conv);
                                 else
                                     explicit_value = trace4_odd_weight_odd_n(k, n, conv);
                                 return std::pair{str(trace_S(TraceQuery(4, k, chi, n), conv).value),
                                                  str(Rational(explicit_value))};
                             }});
            cases.push_back({"gamma1(4) " + key, [=] {
                                 const DirichletCharacter chi = character_by_index(4, k % 2);
                                 return std::pair{str(trace_S(TraceQuery(4, k, chi, n), conv).value),
                                                  str(trace_gamma1_S(Gamma1Query(4, k, n), conv).value)};
                             }});
        }
    // S_2(4) and S_3(4, chi_4) vanish, so the formulas reduce to class number relations.
    cases.push_back({"vanishing k=2,3", [=] {
                         std::string bad;
                         for (std::int64_t n = 1; n <= 5 * b.level4_index_max && bad.empty(); ++n) {
                             const BigInt v2 = n % 2 ? trace4_even_weight_odd_n(2, n, conv) : trace4_even_n(2, n, conv);
                             const BigInt v3 = n % 2 ? trace4_odd_weight_odd_n(3, n, conv) : trace4_even_n(3, n, conv);
                             if (v2 != 0 || v3 != 0) bad = "n=" + std::to_string(n);
                         }
                         return std::pair{std::string(), bad};
                     }});
    cases.push_back({"chi_4 n=3 mod 4", [=] {
                         std::string bad;
                         for (int k = 3; k <= std::max(b.weight_max, 3); k += 2)
                             for (std::int64_t n = 3; n <= 5 * b.level4_index_max; n += 4)
                                 if (trace4_odd_weight_odd_n(k, n, conv) != 0 && bad.empty())
                                     bad = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
                         return std::pair{std::string(), bad};
                     }});
    return run_cases("level4", std::move(cases));
}

OracleReport genus_suite(const SuiteBounds& b, const Conventions& conv)
{
    std::vector<Case> cases;
    for (std::int64_t N = 1; N <= b.genus_level_max; ++N)
        cases.push_back({"N=" + std::to_string(N), [=] {
                             return std::pair{std::to_string(genus_X0(N)), str(trace_S(TraceQuery(N, 2, 1), conv).value)};
                         }});
    return run_cases("genus", std::move(cases));
}

OracleReport level1_suite(const SuiteBounds& b, const Conventions& conv)
{
    std::vector<Case> cases;
    for (int k : {12, 16, 18, 20, 22, 26}) {
        const auto f = level1_eigen_traces(k, b.level1_index_max);
        for (std::int64_t n = 1; n <= b.level1_index_max; ++n)
            cases.push_back({"k=" + std::to_string(k) + ",n=" + std::to_string(n), [=] {
                                 return std::pair{str(f[n]), str(trace_S(TraceQuery(1, k, n), conv).value)};
                             }});
    }
    return run_cases("level1", std::move(cases));
}

OracleReport class_number_suite(const SuiteBounds& b, const Conventions& conv)
{
    std::vector<Case> cases;
    for (std::int64_t n = 1; n <= b.kh_index_max; ++n)
        cases.push_back({"kronecker-hurwitz n=" + std::to_string(n), [=] {
                             return std::pair{std::to_string(sigma1(n)), str(kronecker_hurwitz_sum(n, conv))};
                         }});
    cases.push_back({"inversion |D| <= " + std::to_string(b.class_max), [=] {
                         const auto r = check_inversion(b.class_max);
                         if (r.ok()) return std::pair{std::string("ok"), std::string("ok")};
                         const auto& f = *r.first_failure;
                         return std::pair{str(f.rhs), "D=" + std::to_string(f.D) + ": " + str(f.lhs)};
                     }});
    cases.push_back({"H(4D) relations D <= " + std::to_string(b.class_max), [=] {
                         const auto r = relation_table_check(b.class_max);
                         if (r.ok()) return std::pair{std::string("ok"), std::string("ok")};
                         const auto& f = *r.first_failure;
                         return std::pair{str(f.rhs), "D=" + std::to_string(f.D) + ": " + str(f.lhs)};
                     }});
    cases.push_back({"weighted forms D <= " + std::to_string(b.class_max), [=] {
                         for (std::int64_t D = 1; D <= b.class_max; ++D)
                             if (hurwitz_H(D, conv) != hurwitz_weighted_count(D))
                                 return std::pair{str(hurwitz_weighted_count(D)), "D=" + std::to_string(D) + ": " + str(hurwitz_H(D, conv))};
                         return std::pair{std::string("ok"), std::string("ok")};
                     }});
    return run_cases("class-numbers", std::move(cases));
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"atkin-lehner", "character-sum", "closed-forms", "level4",
                                                   "genus",        "level1",        "class-numbers"};
    return names;
}

OracleReport consistency_suite(const std::string& name, const SuiteBounds& bounds, const Conventions& conv)
{
    if (name == "all") {
        OracleReport all{"all", 0, {}};
        for (const auto& s : suite_names()) all.merge(consistency_suite(s, bounds, conv));
        return all;
    }
    if (name == "atkin-lehner") return atkin_lehner_suite(bounds, conv);
    if (name == "character-sum") return character_sum_suite(bounds, conv);
    if (name == "closed-forms") return closed_forms_suite(bounds, conv);
    if (name == "level4") return level4_suite(bounds, conv);
    if (name == "genus") return genus_suite(bounds, conv);
    if (name == "level1") return level1_suite(bounds, conv);
    if (name == "class-numbers") return class_number_suite(bounds, conv);
    throw precondition_error("unknown suite '" + name + "'");
}

} // namespace hecke
