#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "superjac/curve.hpp"
#include "superjac/divisor.hpp"
#include "superjac/modrep.hpp"
#include "superjac/multanalysis.hpp"
#include "superjac/verify.hpp"

namespace superjac {

using Json = nlohmann::json;

// Plain, JSON-stable mirrors of the library results. Big integers are
// rendered as decimal strings so values survive a round trip unchanged.

struct FamilyReport {
    long long p = 0;
    int r = 0;
    int s = 0;
    long long m = 0;
    long long q = 0;
    long long n = 0;
    bool theorem_regime = false;
    bool operator==(const FamilyReport&) const = default;
};

struct InvariantsReport {
    FamilyReport family;
    long long genus = 0;
    long long infinity_points = 0;
    long long basis_size = 0;
    std::map<std::string, long long> profile;  // unit residue -> multiplicity
    long long multiplicity_gcd = 0;
    bool operator==(const InvariantsReport&) const = default;
};

struct DecomposeReport {
    FamilyReport family;
    std::vector<std::map<std::string, long long>> levels;  // {level, prime_power, dimension}
    long long total = 0;
    long long genus = 0;
    bool operator==(const DecomposeReport&) const = default;
};

struct PicardReport {
    FamilyReport family;
    std::vector<std::string> invariant_factors;
    long long p_rank = 0;
    long long torsion_map_rank = 0;
    bool kernel_is_constants = false;
    std::vector<std::map<std::string, std::string>> classes;  // divisor tables
    bool operator==(const PicardReport&) const = default;
};

struct CommutantCliReport {
    long long n = 0;
    long long p = 0;
    std::string group;
    long long v_commutant_dim = 0;
    bool v_commutant_scalar = false;
    bool w_simple = false;
    long long w_commutant_dim = 0;
    bool doubly_transitive = false;
    bool passed = false;
    bool operator==(const CommutantCliReport&) const = default;
};

struct SymmetrySweepReport {
    long long p = 0;
    long long r_max = 0;
    long long cases = 0;
    bool all_pass = false;
    std::vector<std::map<std::string, long long>> sharp_cases;
    std::vector<std::map<std::string, long long>> failures;
    bool operator==(const SymmetrySweepReport&) const = default;
};

struct MultiplierReport {
    FamilyReport family;
    std::vector<long long> invariant_multipliers;
    bool trivial = false;
    bool operator==(const MultiplierReport&) const = default;
};

struct CertificateReport {
    long long certificate_version = 1;
    FamilyReport family;
    std::string galois_group;
    std::string galois_origin = "user-asserted";
    std::string seed;
    std::vector<std::map<std::string, std::string>> checks;
    bool passed = false;
    std::string endomorphism_algebra;  // empty when not concluded
    std::vector<std::map<std::string, std::string>> levels;
    bool operator==(const CertificateReport&) const = default;
};

struct VerifyAllReport {
    long long q_max = 0;
    long long n_max = 0;
    std::string seed;
    long long criteria = 0;
    long long passed = 0;
    long long failed = 0;
    std::vector<std::map<std::string, std::string>> results;
    bool operator==(const VerifyAllReport&) const = default;
};

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(FamilyReport, p, r, s, m, q, n, theorem_regime)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InvariantsReport, family, genus, infinity_points, basis_size,
                                   profile, multiplicity_gcd)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DecomposeReport, family, levels, total, genus)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PicardReport, family, invariant_factors, p_rank,
                                   torsion_map_rank, kernel_is_constants, classes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CommutantCliReport, n, p, group, v_commutant_dim,
                                   v_commutant_scalar, w_simple, w_commutant_dim,
                                   doubly_transitive, passed)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SymmetrySweepReport, p, r_max, cases, all_pass, sharp_cases,
                                   failures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MultiplierReport, family, invariant_multipliers, trivial)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CertificateReport, certificate_version, family, galois_group,
                                   galois_origin, seed, checks, passed, endomorphism_algebra,
                                   levels)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerifyAllReport, q_max, n_max, seed, criteria, passed, failed,
                                   results)

FamilyReport make_family_report(const CurveFamily& f);
InvariantsReport make_invariants_report(const CurveFamily& f);
DecomposeReport make_decompose_report(const CurveFamily& f);
PicardReport make_picard_report(const CurveFamily& f);
CommutantCliReport make_commutant_report(int n, long long p, GroupLabel label,
                                         unsigned long long seed);
SymmetrySweepReport make_symmetry_report(long long p, int r_max);
MultiplierReport make_multiplier_report(const CurveFamily& f);
CertificateReport make_certificate_report(const Certificate& cert);
VerifyAllReport make_verify_all_report(const VerifyBounds& bounds, unsigned long long seed,
                                       const std::vector<CriterionResult>& results);

} // namespace superjac
