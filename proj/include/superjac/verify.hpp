#pragma once

#include <functional>
#include <string>
#include <vector>

#include "superjac/curve.hpp"

namespace superjac {

/// Grid bounds for the exhaustive checks. The divisor-theoretic suites run
/// on the sub-grid min(q_max, divisor_q_max) x min(n_max, divisor_n_max).
struct VerifyBounds {
    long long q_max = 128;
    long long n_max = 50;
    long long divisor_q_max = 27;
    long long divisor_n_max = 12;
    long long odd_sweep_q_max = 243;
    long long even_sweep_q_max = 256;
    int random_vectors = 500;
};

/// Deliberate runtime fault hooks so the negative controls can demonstrate
/// that a broken formula is caught. Never armed outside tests.
struct FaultInjection {
    long long genus_offset = 0;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// All families (p, r, s, m) with p in {2,3,5,7}, q <= q_max, 2 <= n <= n_max.
std::vector<CurveFamily> family_grid(long long q_max, long long n_max);

CriterionResult check_genus_triple_identity(const VerifyBounds& b, const FaultInjection& fault);
CriterionResult check_decomposition_sum(const VerifyBounds& b);
CriterionResult check_multiplicity_gcd(const VerifyBounds& b);
CriterionResult check_principality_oracle(const VerifyBounds& b, unsigned long long seed);
CriterionResult check_torsion_suite(const VerifyBounds& b);
CriterionResult check_commutant_grid(const VerifyBounds& b, unsigned long long seed);
CriterionResult check_constancy_sweeps(const VerifyBounds& b);
CriterionResult check_profile_multipliers(const VerifyBounds& b);
CriterionResult check_birational_coherence(const VerifyBounds& b);

/// Runs the nine grid criteria; `jobs` > 1 fans the independent criteria out
/// over threads, results always merged in criterion order.
std::vector<CriterionResult> run_verification(const VerifyBounds& b, unsigned long long seed,
                                              int jobs, const FaultInjection& fault);

} // namespace superjac
