// Independent ground truth (q-expansions of level 1 eigenforms, genus of X_0(N)) and the
// harness that checks the trace engines against it and against each other.

#ifndef HECKE_ORACLES_HPP
#define HECKE_ORACLES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/arith.hpp"
#include "hecke/conventions.hpp"
#include "hecke/qexpansion.hpp"

namespace hecke {

/// q prod_{m >= 1} (1 - q^m)^24 up to q^P.
QExpansion<BigInt> delta_qexp(std::int64_t precision);
/// Bernoulli number B_m (B_1 = -1/2).
Rational bernoulli(unsigned m);
/// Normalised Eisenstein series 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k >= 4 even.
QExpansion<Rational> eisenstein(int k, std::int64_t precision);
/// The normalised eigenform Delta * E_{k-12} spanning S_k(SL_2(Z)) for k in {12, 16, 18, 20, 22, 26}.
QExpansion<Rational> level1_eigen_traces(int k, std::int64_t precision);
/// Genus of X_0(N) from the counts of elliptic points and cusps.
std::int64_t genus_X0(std::int64_t N);

struct OracleFailure {
    std::string key;
    std::string expected;
    std::string actual;
};

struct OracleReport {
    std::string suite;
    std::int64_t cases = 0;
    std::vector<OracleFailure> failures;

    bool ok() const { return failures.empty(); }
    void merge(OracleReport other);
};

struct SuiteBounds {
    std::int64_t level_max = 16;
    int weight_max = 8;
    std::int64_t index_max = 12;
    std::int64_t al_level_max = 30;       ///< Atkin-Lehner degeneration and involution checks
    std::int64_t c1_level_max = 40;
    std::int64_t genus_level_max = 100;
    std::int64_t level1_index_max = 50;
    std::int64_t level4_index_max = 100;
    std::int64_t kh_index_max = 500;      ///< Kronecker-Hurwitz
    std::int64_t class_max = 2000;
};

/// Names accepted by consistency_suite.
const std::vector<std::string>& suite_names();

/// Runs one named suite: "atkin-lehner", "character-sum", "closed-forms", "level4", "genus",
/// "level1", "class-numbers"; or "all". Failures are collected, never thrown.
OracleReport consistency_suite(const std::string& name, const SuiteBounds& bounds = {}, const Conventions& conv = {});

} // namespace hecke

#endif
